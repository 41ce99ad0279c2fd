#pragma once

// Exact arithmetic in GF(q), q = p^m <= 256.
//
// An element is stored as the integer sum(c_i * p^i) of its coefficient vector over GF(p) with respect to the
// polynomial basis 1, x, ..., x^(m-1); for prime fields this is just the residue. All arithmetic goes through
// q x q tables built once per context, so elements fit in a byte and matrices store raw bytes.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projconn/error.hpp"

namespace projconn {

using Poly = std::vector<unsigned>;  // coefficients low-to-high over GF(p)

namespace detail {

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inv_mod_prime(unsigned a, unsigned p) {
    // a^(p-2)
    unsigned result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
        e >>= 1u;
    }
    return result;
}

// Remainder of a modulo b over GF(p); b must have a non-zero leading coefficient.
inline Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    poly_trim(a);
    const unsigned lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const unsigned f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - f * b[i] % p)) % p;
        poly_trim(a);
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..m/2.
inline bool is_irreducible(const Poly& modulus, unsigned p) {
    const std::size_t m = modulus.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        Poly divisor(d + 1, 0);
        divisor[d] = 1;
        // odometer over the d low coefficients
        while (true) {
            if (poly_mod(modulus, divisor, p).empty()) return false;
            std::size_t pos = 0;
            while (pos < d && ++divisor[pos] == p) divisor[pos++] = 0;
            if (pos == d) break;
        }
    }
    return true;
}

struct FieldTables {
    unsigned p = 0;
    unsigned m = 0;
    unsigned q = 0;
    Poly modulus;
    std::vector<std::uint8_t> add, mul, neg, inv;  // inv[0] unused
};

inline std::shared_ptr<const FieldTables> build_tables(unsigned p, unsigned m, Poly modulus) {
    auto t = std::make_shared<FieldTables>();
    t->p = p;
    t->m = m;
    t->modulus = std::move(modulus);
    unsigned q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    t->q = q;

    auto coeffs = [&](unsigned v) {
        Poly c(m, 0);
        for (unsigned i = 0; i < m; ++i, v /= p) c[i] = v % p;
        return c;
    };
    auto encode = [&](const Poly& c) {
        unsigned v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    };

    t->add.assign(q * q, 0);
    t->mul.assign(q * q, 0);
    t->neg.assign(q, 0);
    t->inv.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        const Poly ca = coeffs(a);
        Poly cn(m);
        for (unsigned i = 0; i < m; ++i) cn[i] = (p - ca[i]) % p;
        t->neg[a] = static_cast<std::uint8_t>(encode(cn));
        for (unsigned b = 0; b < q; ++b) {
            const Poly cb = coeffs(b);
            Poly cs(m);
            for (unsigned i = 0; i < m; ++i) cs[i] = (ca[i] + cb[i]) % p;
            t->add[a * q + b] = static_cast<std::uint8_t>(encode(cs));

            Poly prod(2 * m, 0);
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            Poly red = m == 1 ? Poly{prod[0]} : poly_mod(prod, t->modulus, p);
            red.resize(m, 0);
            t->mul[a * q + b] = static_cast<std::uint8_t>(encode(red));
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (t->mul[a * q + b] == 1) {
                t->inv[a] = static_cast<std::uint8_t>(b);
                break;
            }
    return t;
}

}  // namespace detail

/// Built-in moduli for the extension fields with q <= 81. Prime fields need none.
inline std::optional<Poly> default_modulus(unsigned p, unsigned m) {
    if (m == 1) return Poly{0, 1};
    struct Entry {
        unsigned p, m;
        Poly modulus;
    };
    static const std::vector<Entry> table = {
        {2, 2, {1, 1, 1}},           {2, 3, {1, 1, 0, 1}}, {2, 4, {1, 1, 0, 0, 1}}, {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}}, {3, 2, {2, 1, 1}},    {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 1, 0, 0, 1}},
        {5, 2, {2, 1, 1}},           {7, 2, {1, 0, 1}},
    };
    for (const auto& e : table)
        if (e.p == p && e.m == m) return e.modulus;
    return std::nullopt;
}

class FieldElement;

class FieldCtx {
   public:
    using Raw = std::uint8_t;

    /// Field of order q with the built-in modulus.
    static FieldCtx make(unsigned q) {
        for (unsigned p = 2; p <= q; ++p) {
            if (!detail::is_prime(p) || q % p != 0) continue;
            unsigned m = 0, r = q;
            while (r % p == 0) {
                r /= p;
                ++m;
            }
            if (r != 1) break;
            auto modulus = default_modulus(p, m);
            if (!modulus)
                throw Error(ErrorKind::InvalidArgument,
                            "no built-in modulus for q=" + std::to_string(q) + "; supply one explicitly");
            return make(p, m, *modulus);
        }
        throw Error(ErrorKind::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
    }

    /// Field GF(p^m) defined by a monic irreducible modulus of degree m (low-to-high coefficients).
    static FieldCtx make(unsigned p, unsigned m, Poly modulus) {
        if (!detail::is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
        if (m == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
        unsigned long long q = 1;
        for (unsigned i = 0; i < m; ++i) q *= p;
        if (q > 256) throw Error(ErrorKind::InvalidArgument, "fields larger than 256 elements are not supported");
        if (modulus.size() != m + 1 || modulus.back() != 1)
            throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
        for (unsigned c : modulus)
            if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
        if (m > 1 && !detail::is_irreducible(modulus, p))
            throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
        return FieldCtx(detail::build_tables(p, m, std::move(modulus)));
    }

    unsigned p() const noexcept { return t_->p; }
    unsigned m() const noexcept { return t_->m; }
    unsigned q() const noexcept { return t_->q; }
    const Poly& modulus() const noexcept { return t_->modulus; }
    bool is_prime_field() const noexcept { return t_->m == 1; }

    Raw add(Raw a, Raw b) const noexcept {
        if (is_prime_field()) {
            const unsigned s = unsigned(a) + b;
            return static_cast<Raw>(s >= t_->p ? s - t_->p : s);
        }
        return t_->add[a * t_->q + b];
    }
    Raw neg(Raw a) const noexcept { return t_->neg[a]; }
    Raw sub(Raw a, Raw b) const noexcept { return add(a, t_->neg[b]); }
    Raw mul(Raw a, Raw b) const noexcept { return t_->mul[a * t_->q + b]; }
    Raw inv(Raw a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        return t_->inv[a];
    }
    Raw div(Raw a, Raw b) const {
        if (b == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
        return mul(a, t_->inv[b]);
    }

    Poly coefficients(Raw v) const {
        Poly c(t_->m, 0);
        unsigned x = v;
        for (unsigned i = 0; i < t_->m; ++i, x /= t_->p) c[i] = x % t_->p;
        return c;
    }
    Raw from_coefficients(std::span<const unsigned> c) const {
        if (c.size() != t_->m)
            throw Error(ErrorKind::Parse, "expected " + std::to_string(t_->m) + " coefficients per field element");
        unsigned v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= t_->p) throw Error(ErrorKind::Parse, "coefficient out of range");
            v = v * t_->p + c[i];
        }
        return static_cast<Raw>(v);
    }
    Raw checked(unsigned v) const {
        if (v >= t_->q) throw Error(ErrorKind::InvalidArgument, "value " + std::to_string(v) + " not in GF(q)");
        return static_cast<Raw>(v);
    }

    FieldElement element(unsigned v) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// All q elements, zero first, in increasing order of the integer encoding.
    std::vector<FieldElement> enumerate() const;
    /// Non-zero elements as raw values 1..q-1.
    std::vector<Raw> units() const {
        std::vector<Raw> out;
        for (unsigned v = 1; v < t_->q; ++v) out.push_back(static_cast<Raw>(v));
        return out;
    }

    /// "1+x" style rendering; prime fields render the residue.
    std::string format(Raw v) const {
        if (is_prime_field()) return std::to_string(v);
        std::string out;
        const Poly c = coefficients(v);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
            if (i >= 1) out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus);
    }

   private:
    explicit FieldCtx(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
    std::shared_ptr<const detail::FieldTables> t_;
};

class FieldElement {
   public:
    FieldElement(FieldCtx ctx, FieldCtx::Raw value) : ctx_(std::move(ctx)), value_(value) {}

    const FieldCtx& ctx() const noexcept { return ctx_; }
    FieldCtx::Raw value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    Poly coefficients() const { return ctx_.coefficients(value_); }

    FieldElement inv() const { return {ctx_, ctx_.inv(value_)}; }
    FieldElement operator-() const { return {ctx_, ctx_.neg(value_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.ctx_, a.ctx_.add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.ctx_, a.ctx_.sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.ctx_, a.ctx_.mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.ctx_, a.ctx_.div(a.value_, b.value_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.ctx_ == b.ctx_;
    }

   private:
    static void same(const FieldElement& a, const FieldElement& b) {
        if (!(a.ctx_ == b.ctx_)) throw Error(ErrorKind::ContextMismatch, "operands belong to different fields");
    }

    FieldCtx ctx_;
    FieldCtx::Raw value_;
};

inline FieldElement FieldCtx::element(unsigned v) const { return {*this, checked(v)}; }
inline FieldElement FieldCtx::zero() const { return {*this, 0}; }
inline FieldElement FieldCtx::one() const { return {*this, 1}; }
inline std::vector<FieldElement> FieldCtx::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(t_->q);
    for (unsigned v = 0; v < t_->q; ++v) out.emplace_back(*this, static_cast<Raw>(v));
    return out;
}

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

/// Single entry point for the six field operations; `b` is ignored by Neg and Inv.
inline FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
        case ArithOp::Neg: return -a;
        case ArithOp::Inv: return a.inv();
    }
    throw Error(ErrorKind::Internal, "unknown arithmetic op");
}

}  // namespace projconn
