#pragma once

// Dense matrices over GF(q) and subspaces of GF(q)^n in canonical (RREF) form.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projconn/error.hpp"
#include "projconn/field.hpp"

namespace projconn {

using Raw = FieldCtx::Raw;
using Vec = std::vector<Raw>;

class Matrix {
   public:
    Matrix(FieldCtx ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix from_rows(const FieldCtx& ctx, const std::vector<std::vector<unsigned>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(ctx, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = ctx.checked(rows[r][c]);
        }
        return m;
    }
    static Matrix from_row_vectors(const FieldCtx& ctx, std::size_t cols, std::span<const Vec> rows) {
        Matrix m(ctx, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
        }
        return m;
    }
    static Matrix from_columns(const FieldCtx& ctx, std::size_t rows, std::span<const Vec> cols) {
        Matrix m(ctx, rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }
    static Matrix identity(const FieldCtx& ctx, std::size_t n) {
        Matrix m(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const Raw> data() const noexcept { return data_; }

    Raw& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Raw operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    FieldElement element(std::size_t r, std::size_t c) const { return {ctx_, (*this)(r, c)}; }

    std::span<const Raw> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vector(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
    Vec column(std::size_t c) const {
        Vec v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    std::vector<Vec> columns() const {
        std::vector<Vec> out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(ctx_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix m(ctx_, rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
        return m;
    }

    /// Rows of `top` followed by rows of `bottom`.
    static Matrix stack(const Matrix& top, const Matrix& bottom) {
        if (top.cols_ != bottom.cols_) throw Error(ErrorKind::DimensionMismatch, "stack: column counts differ");
        Matrix m(top.ctx_, top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
        std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + top.data_.size());
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        if (!(a.ctx_ == b.ctx_)) throw Error(ErrorKind::ContextMismatch, "matrix product over different fields");
        const FieldCtx& f = a.ctx_;
        Matrix m(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Raw x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = f.add(m(i, j), f.mul(x, b(l, j)));
            }
        return m;
    }

    Vec apply(std::span<const Raw> v) const {
        if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
        Vec out(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] = ctx_.add(out[r], ctx_.mul((*this)(r, c), v[c]));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.ctx_ == b.ctx_;
    }

   private:
    FieldCtx ctx_;
    std::size_t rows_, cols_;
    Vec data_;
};

struct RrefResult {
    Matrix reduced;  // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
inline RrefResult rref(Matrix m) {
    const FieldCtx& f = m.ctx();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Raw s = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Raw factor = f.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.ctx(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto red = rref(std::move(aug));
    if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.ctx(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
    return inv;
}

/// A subspace of GF(q)^n, held as its RREF basis. Equality and hashing are on that canonical form.
class Subspace {
   public:
    /// Row space of `rows`.
    static Subspace span(const Matrix& rows) {
        auto red = rref(rows);
        Matrix basis(rows.ctx(), red.rank, rows.cols());
        for (std::size_t r = 0; r < red.rank; ++r)
            for (std::size_t c = 0; c < rows.cols(); ++c) basis(r, c) = red.reduced(r, c);
        return Subspace(std::move(basis), std::move(red.pivots));
    }
    static Subspace zero(const FieldCtx& ctx, std::size_t n) { return span(Matrix(ctx, 0, n)); }
    static Subspace whole(const FieldCtx& ctx, std::size_t n) { return span(Matrix::identity(ctx, n)); }

    const FieldCtx& ctx() const noexcept { return basis_.ctx(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const std::string& key() const noexcept { return key_; }

    /// Membership by reduction against the pivots of the RREF basis.
    bool contains(std::span<const Raw> v) const {
        if (v.size() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "vector length != ambient dim");
        const FieldCtx& f = ctx();
        Vec w(v.begin(), v.end());
        for (std::size_t r = 0; r < dim(); ++r) {
            const Raw c = w[pivots_[r]];
            if (c == 0) continue;
            const Raw factor = f.neg(c);
            for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.add(w[j], f.mul(factor, basis_(r, j)));
        }
        return std::all_of(w.begin(), w.end(), [](Raw x) { return x == 0; });
    }
    bool contains(const Subspace& other) const {
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_.row(r))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.key_ == b.key_ && a.ctx() == b.ctx(); }

   private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {
        key_.reserve(basis_.data().size() + 2);
        key_.push_back(static_cast<char>(basis_.cols()));
        key_.push_back(static_cast<char>(basis_.rows()));
        for (Raw x : basis_.data()) key_.push_back(static_cast<char>(x));
    }

    Matrix basis_;
    std::vector<std::size_t> pivots_;
    std::string key_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept { return std::hash<std::string>{}(s.key()); }
};

namespace detail {
inline void require_same_ambient(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions differ");
    if (!(x.ctx() == y.ctx())) throw Error(ErrorKind::ContextMismatch, "subspaces over different fields");
}
}  // namespace detail

/// Null space {v : m v = 0} as a subspace of GF(q)^cols.
inline Subspace kernel(const Matrix& m) {
    const FieldCtx& f = m.ctx();
    auto red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_row_vectors(f, m.cols(), basis));
}

inline Subspace sum(const Subspace& x, const Subspace& y) {
    detail::require_same_ambient(x, y);
    return Subspace::span(Matrix::stack(x.basis(), y.basis()));
}

/// x ∩ y from the kernel of the stacked system a·X - b·Y = 0.
inline Subspace intersect(const Subspace& x, const Subspace& y) {
    detail::require_same_ambient(x, y);
    const FieldCtx& f = x.ctx();
    const std::size_t dx = x.dim(), dy = y.dim(), n = x.ambient_dim();
    Matrix system(f, n, dx + dy);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < dx; ++i) system(c, i) = x.basis()(i, c);
        for (std::size_t j = 0; j < dy; ++j) system(c, dx + j) = f.neg(y.basis()(j, c));
    }
    const Subspace coeffs = kernel(system);
    Matrix rows(f, coeffs.dim(), n);
    for (std::size_t r = 0; r < coeffs.dim(); ++r)
        for (std::size_t i = 0; i < dx; ++i) {
            const Raw a = coeffs.basis()(r, i);
            if (a == 0) continue;
            for (std::size_t c = 0; c < n; ++c) rows(r, c) = f.add(rows(r, c), f.mul(a, x.basis()(i, c)));
        }
    return Subspace::span(rows);
}

/// Number of k-dimensional subspaces of GF(q)^n; saturates at ULLONG_MAX.
inline unsigned long long gaussian_binomial(std::size_t n, std::size_t k, unsigned q) {
    if (k > n) return 0;
    unsigned __int128 num = 1, den = 1;
    constexpr unsigned __int128 cap = static_cast<unsigned __int128>(1) << 120;
    for (std::size_t i = 0; i < k; ++i) {
        unsigned __int128 qa = 1, qb = 1;
        for (std::size_t e = 0; e < n - i; ++e) qa *= q;
        for (std::size_t e = 0; e < i + 1; ++e) qb *= q;
        num *= qa - 1;
        den *= qb - 1;
        const unsigned __int128 g = [](unsigned __int128 a, unsigned __int128 b) {
            while (b) {
                auto t = a % b;
                a = b;
                b = t;
            }
            return a;
        }(num, den);
        num /= g;
        den /= g;
        if (num > cap) return ~0ULL;
    }
    const unsigned __int128 v = num / den;
    return v > ~0ULL ? ~0ULL : static_cast<unsigned long long>(v);
}

/// Calls `fn` once per k-subset of {0..n-1} in colexicographic order.
inline void for_each_colex_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        fn(c);
        std::size_t i = 0;
        while (i < k && (i + 1 < k ? c[i] + 1 == c[i + 1] : c[i] + 1 == n)) ++i;
        if (i == k) return;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j) c[j] = j;
    }
}

/// Streams every k-dimensional subspace of GF(q)^n exactly once: pivot sets in colex order, free entries as an
/// odometer (last free position fastest). Refuses up front if the Gaussian binomial exceeds `budget`.
inline void for_each_subspace(const FieldCtx& ctx, std::size_t n, std::size_t k,
                              const std::function<void(const Subspace&)>& fn,
                              unsigned long long budget = kDefaultBudget) {
    if (k > n) throw Error(ErrorKind::InvalidArgument, "subspace dimension exceeds ambient dimension");
    const unsigned long long count = gaussian_binomial(n, k, ctx.q());
    if (count > budget) throw BudgetError("enumerating " + std::to_string(k) + "-subspaces of GF(q)^" + std::to_string(n), count, budget);
    const unsigned q = ctx.q();
    for_each_colex_subset(n, k, [&](const std::vector<std::size_t>& piv) {
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(r, c);
        Matrix m(ctx, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
        while (true) {
            fn(Subspace::span(m));
            std::size_t pos = free.size();
            while (pos > 0) {
                auto [r, c] = free[pos - 1];
                if (++m(r, c) < q) break;
                m(r, c) = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    });
}

inline std::vector<Subspace> enumerate_subspaces(const FieldCtx& ctx, std::size_t n, std::size_t k,
                                                 unsigned long long budget = kDefaultBudget) {
    std::vector<Subspace> out;
    for_each_subspace(ctx, n, k, [&](const Subspace& s) { out.push_back(s); }, budget);
    return out;
}

/// Non-zero vectors of GF(q)^n whose first non-zero coordinate is 1, in lexicographic order.
inline std::vector<Vec> normalized_vectors(const FieldCtx& ctx, std::size_t n) {
    std::vector<Vec> out;
    const unsigned q = ctx.q();
    for (std::size_t lead = 0; lead < n; ++lead) {
        Vec v(n, 0);
        v[lead] = 1;
        while (true) {
            out.push_back(v);
            std::size_t pos = n;
            while (pos > lead + 1) {
                if (++v[pos - 1] < q) break;
                v[pos - 1] = 0;
                --pos;
            }
            if (pos == lead + 1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace projconn
