#pragma once

// The dual side of a projective code. A tuple of functionals x*_1..x*_n on W = GF(q)^k defines the code
// C(x*_1..x*_n) = { (x*_1 x, ..., x*_n x) : x in W }, whose generator matrix has the functionals as columns.
// An unordered spanning point set X of PG(k-1,q) defines the class C(X) of all codes built from any ordering
// and any scalar multiples of its points; each class is one monomial-equivalence class.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "projconn/codes.hpp"
#include "projconn/error.hpp"
#include "projconn/field.hpp"
#include "projconn/matspace.hpp"

namespace projconn {

/// Ordered functionals on GF(q)^k, spanning the dual space and pairwise non-proportional. Scalars matter.
class FunctionalTuple {
   public:
    static FunctionalTuple make(const FieldCtx& ctx, std::size_t k, std::vector<Vec> funcs) {
        for (const Vec& f : funcs) {
            if (f.size() != k) throw Error(ErrorKind::DimensionMismatch, "functional length != k");
            for (Raw x : f) ctx.checked(x);
        }
        FunctionalTuple t(ctx, k, std::move(funcs));
        t.validate();
        return t;
    }

    /// Columns of the RREF generator matrix of a projective code.
    static FunctionalTuple of_code(const LinearCode& c) {
        if (!c.is_projective()) throw Error(ErrorKind::NotProjective, "functional tuple needs a projective code");
        return FunctionalTuple(c.ctx(), c.k(), c.gen().columns());
    }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::size_t n() const noexcept { return funcs_.size(); }
    std::size_t k() const noexcept { return k_; }
    const Vec& operator[](std::size_t i) const { return funcs_.at(i); }
    const std::vector<Vec>& funcs() const noexcept { return funcs_; }

    /// k x n matrix whose j-th column is x*_j; its rows are U(b_1)..U(b_k) for the standard basis of W.
    Matrix generator() const { return Matrix::from_columns(ctx_, k_, funcs_); }

    std::vector<ProjPoint> points() const {
        std::vector<ProjPoint> pts;
        pts.reserve(funcs_.size());
        for (const Vec& f : funcs_) pts.push_back(ProjPoint::of(ctx_, f));
        return pts;
    }
    /// The points as a sorted set.
    std::vector<ProjPoint> point_set() const {
        auto pts = points();
        std::sort(pts.begin(), pts.end());
        return pts;
    }

    /// Copy with position i replaced; conditions re-checked.
    FunctionalTuple with(std::size_t i, Vec f) const {
        auto funcs = funcs_;
        funcs.at(i) = std::move(f);
        return make(ctx_, k_, std::move(funcs));
    }
    FunctionalTuple swapped(std::size_t i, std::size_t j) const {
        auto funcs = funcs_;
        std::swap(funcs.at(i), funcs.at(j));
        return FunctionalTuple(ctx_, k_, std::move(funcs));
    }

    friend bool operator==(const FunctionalTuple& a, const FunctionalTuple& b) {
        return a.k_ == b.k_ && a.funcs_ == b.funcs_ && a.ctx_ == b.ctx_;
    }

   private:
    FunctionalTuple(FieldCtx ctx, std::size_t k, std::vector<Vec> funcs)
        : ctx_(std::move(ctx)), k_(k), funcs_(std::move(funcs)) {}

    void validate() const {
        for (const Vec& f : funcs_)
            if (std::all_of(f.begin(), f.end(), [](Raw x) { return x == 0; }))
                throw Error(ErrorKind::ConditionViolated, "zero functional");
        if (rank(generator()) < k_)
            throw Error(ErrorKind::ConditionViolated, "functionals do not span the dual space (rank < k)");
        auto pts = point_set();
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
            throw Error(ErrorKind::ConditionViolated, "two functionals are scalar multiples of each other");
    }

    FieldCtx ctx_;
    std::size_t k_;
    std::vector<Vec> funcs_;
};

/// C(x*_1, ..., x*_n): the image of x -> (x*_1 x, ..., x*_n x). Always projective.
inline LinearCode code_from_functionals(const FunctionalTuple& t) { return LinearCode::from_generator(t.generator()); }

/// An n-element set of points of PG(k-1,q) that spans, stored sorted.
class SpecialSet {
   public:
    static SpecialSet make(const FieldCtx& ctx, std::size_t k, std::vector<ProjPoint> points) {
        for (const auto& p : points)
            if (p.dim() != k) throw Error(ErrorKind::DimensionMismatch, "point dimension != k");
        std::sort(points.begin(), points.end());
        if (std::adjacent_find(points.begin(), points.end()) != points.end())
            throw Error(ErrorKind::InvalidArgument, "special set has repeated points");
        if (point_rank(ctx, points) < k)
            throw Error(ErrorKind::ConditionViolated, "point set contains no k independent points");
        return SpecialSet(ctx, k, std::move(points));
    }
    static SpecialSet of_tuple(const FunctionalTuple& t) { return make(t.ctx(), t.k(), t.points()); }

    const FieldCtx& ctx() const noexcept { return ctx_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return points_.size(); }
    const std::vector<ProjPoint>& points() const noexcept { return points_; }
    bool contains(const ProjPoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    friend bool operator==(const SpecialSet& a, const SpecialSet& b) { return a.k_ == b.k_ && a.points_ == b.points_; }

   private:
    SpecialSet(FieldCtx ctx, std::size_t k, std::vector<ProjPoint> points)
        : ctx_(std::move(ctx)), k_(k), points_(std::move(points)) {}

    FieldCtx ctx_;
    std::size_t k_;
    std::vector<ProjPoint> points_;
};

namespace detail {
// Greedy leftmost: keep a vector iff it raises the rank of the kept set.
inline std::vector<std::size_t> greedy_independent(const FieldCtx& ctx, std::size_t k, std::span<const Vec> vecs) {
    std::vector<std::size_t> kept;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < vecs.size() && kept.size() < k; ++i) {
        rows.push_back(vecs[i]);
        if (rank(Matrix::from_row_vectors(ctx, k, rows)) == rows.size())
            kept.push_back(i);
        else
            rows.pop_back();
    }
    if (kept.size() != k) throw Error(ErrorKind::Internal, "no k independent points in a spanning set");
    return kept;
}
}  // namespace detail

/// Indices (into the sorted points) of the lexicographically greedy k-element independent subset.
inline std::vector<std::size_t> independent_subset(const SpecialSet& s) {
    std::vector<Vec> reps;
    for (const auto& p : s.points()) reps.push_back(p.rep());
    return detail::greedy_independent(s.ctx(), s.k(), reps);
}

/// Positions of the greedy k-element independent subset of the tuple, scanning left to right.
inline std::vector<std::size_t> independent_subset(const FunctionalTuple& t) {
    return detail::greedy_independent(t.ctx(), t.k(), t.funcs());
}

/// L(e_i) = scalars[i] * e_{sigma[i]}.
struct MonomialMap {
    std::vector<std::size_t> sigma;
    Vec scalars;

    static MonomialMap identity(std::size_t n) {
        MonomialMap m;
        m.sigma.resize(n);
        std::iota(m.sigma.begin(), m.sigma.end(), 0);
        m.scalars.assign(n, 1);
        return m;
    }

    void validate() const {
        if (sigma.size() != scalars.size()) throw Error(ErrorKind::DimensionMismatch, "monomial map size mismatch");
        std::vector<bool> hit(sigma.size(), false);
        for (std::size_t s : sigma) {
            if (s >= sigma.size() || hit[s]) throw Error(ErrorKind::InvalidArgument, "sigma is not a permutation");
            hit[s] = true;
        }
        for (Raw a : scalars)
            if (a == 0) throw Error(ErrorKind::InvalidArgument, "monomial map with a zero scalar");
    }

    Vec apply(const FieldCtx& ctx, std::span<const Raw> v) const {
        Vec w(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) w[sigma[i]] = ctx.mul(scalars[i], v[i]);
        return w;
    }
};

inline LinearCode apply_monomial(const MonomialMap& l, const LinearCode& c) {
    if (l.sigma.size() != c.n()) throw Error(ErrorKind::DimensionMismatch, "monomial map length != code length");
    l.validate();
    Matrix img(c.ctx(), c.k(), c.n());
    for (std::size_t r = 0; r < c.k(); ++r) {
        const Vec w = l.apply(c.ctx(), c.gen().row(r));
        for (std::size_t j = 0; j < c.n(); ++j) img(r, j) = w[j];
    }
    return LinearCode::from_generator(img);
}

/// Calls fn on every monomial map of GF(q)^n; refuses if (q-1)^n n! exceeds the budget.
inline void for_each_monomial_map(const FieldCtx& ctx, std::size_t n, const std::function<void(const MonomialMap&)>& fn,
                                  unsigned long long budget = kDefaultBudget) {
    unsigned long long count = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        count *= i * (ctx.q() - 1);
        if (count > budget) throw BudgetError("enumerating monomial maps", count, budget);
    }
    MonomialMap m = MonomialMap::identity(n);
    const Raw last = static_cast<Raw>(ctx.q() - 1);
    do {
        std::fill(m.scalars.begin(), m.scalars.end(), Raw{1});
        while (true) {
            fn(m);
            std::size_t pos = n;
            while (pos > 0) {
                if (m.scalars[pos - 1] < last) {
                    ++m.scalars[pos - 1];
                    break;
                }
                m.scalars[pos - 1] = 1;
                --pos;
            }
            if (pos == 0) break;
        }
    } while (std::next_permutation(m.sigma.begin(), m.sigma.end()));
}

/// All invertible k x k matrices over GF(q), in odometer order of their entries.
inline std::vector<Matrix> general_linear_group(const FieldCtx& ctx, std::size_t k, unsigned long long budget = kDefaultBudget) {
    unsigned long long total = 1;
    for (std::size_t i = 0; i < k * k; ++i) {
        total *= ctx.q();
        if (total > budget) throw BudgetError("enumerating GL(k,q) candidates", total, budget);
    }
    std::vector<Matrix> out;
    Matrix m(ctx, k, k);
    for (unsigned long long idx = 0; idx < total; ++idx) {
        unsigned long long x = idx;
        for (std::size_t e = k * k; e-- > 0; x /= ctx.q()) m(e / k, e % k) = static_cast<Raw>(x % ctx.q());
        if (rank(m) == k) out.push_back(m);
    }
    return out;
}

/// The automorphism L of W* (as a k x k matrix on coordinate vectors) with L src_i = dst_i for the normalized
/// representatives. Both lists must be k independent points.
inline Matrix dual_automorphism_aligning(const FieldCtx& ctx, std::span<const ProjPoint> src, std::span<const ProjPoint> dst) {
    if (src.size() != dst.size() || src.empty())
        throw Error(ErrorKind::DimensionMismatch, "aligning needs two lists of k points");
    const std::size_t k = src.front().dim();
    if (src.size() != k) throw Error(ErrorKind::DimensionMismatch, "aligning needs exactly k points");
    std::vector<Vec> a, b;
    for (const auto& p : src) a.push_back(p.rep());
    for (const auto& p : dst) b.push_back(p.rep());
    const auto a_inv = inverse(Matrix::from_columns(ctx, k, a));
    const Matrix bm = Matrix::from_columns(ctx, k, b);
    if (!a_inv || rank(bm) < k) throw Error(ErrorKind::Internal, "aligning points are not independent");
    return bm * *a_inv;
}

/// Index-set form: align the points of X at src_idx onto the points of Y at dst_idx.
inline Matrix dual_automorphism_aligning(const FunctionalTuple& x, std::span<const std::size_t> src_idx,
                                         const FunctionalTuple& y, std::span<const std::size_t> dst_idx) {
    std::vector<ProjPoint> src, dst;
    for (std::size_t i : src_idx) src.push_back(ProjPoint::of(x.ctx(), x[i]));
    for (std::size_t i : dst_idx) dst.push_back(ProjPoint::of(y.ctx(), y[i]));
    return dual_automorphism_aligning(x.ctx(), src, dst);
}

/// (L x*_1, ..., L x*_n). Defines the same code as t for every invertible L.
inline FunctionalTuple transform(const Matrix& l, const FunctionalTuple& t) {
    std::vector<Vec> funcs;
    funcs.reserve(t.n());
    for (const Vec& f : t.funcs()) funcs.push_back(l.apply(f));
    return FunctionalTuple::make(t.ctx(), t.k(), std::move(funcs));
}

namespace detail {
inline std::vector<LinearCode> sorted_codes(std::unordered_set<LinearCode, LinearCodeHash>&& set) {
    std::vector<LinearCode> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(),
              [](const LinearCode& a, const LinearCode& b) { return a.space().key() < b.space().key(); });
    return out;
}
}  // namespace detail

/// C(X) by brute force over every ordering and every scalar choice, deduplicated, sorted by canonical key.
inline std::vector<LinearCode> class_enumerate(const SpecialSet& x, unsigned long long budget = kDefaultBudget) {
    const FieldCtx& f = x.ctx();
    const std::size_t n = x.n(), k = x.k();
    std::unordered_set<LinearCode, LinearCodeHash> codes;
    for_each_monomial_map(
        f, n,
        [&](const MonomialMap& m) {
            Matrix g(f, k, n);
            for (std::size_t j = 0; j < n; ++j) {
                const Vec& rep = x.points()[m.sigma[j]].rep();
                for (std::size_t r = 0; r < k; ++r) g(r, j) = f.mul(m.scalars[j], rep[r]);
            }
            codes.insert(LinearCode::from_generator(g));
        },
        budget);
    return detail::sorted_codes(std::move(codes));
}

/// |{monomial L : L(c) = c}| by brute force.
inline unsigned long long automorphism_group_order(const LinearCode& c, unsigned long long budget = kDefaultBudget) {
    unsigned long long m = 0;
    for_each_monomial_map(
        c.ctx(), c.n(),
        [&](const MonomialMap& l) {
            if (apply_monomial(l, c) == c) ++m;
        },
        budget);
    return m;
}

/// Image of a point set under an automorphism of W*, as a sorted set.
inline std::vector<ProjPoint> map_points(const FieldCtx& ctx, const Matrix& l, std::span<const ProjPoint> pts) {
    std::vector<ProjPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(ProjPoint::of(ctx, l.apply(p.rep())));
    std::sort(out.begin(), out.end());
    return out;
}

/// Whether some L in GL(k,q) carries the point set X onto Y (brute force over the group).
inline bool classes_equal(const SpecialSet& x, const SpecialSet& y, unsigned long long budget = kDefaultBudget) {
    if (x.k() != y.k()) throw Error(ErrorKind::DimensionMismatch, "special sets in different dimensions");
    if (x.n() != y.n()) return false;
    for (const Matrix& l : general_linear_group(x.ctx(), x.k(), budget))
        if (map_points(x.ctx(), l, x.points()) == y.points()) return true;
    return false;
}

/// (q-1)^n n!, the number of monomial maps.
inline unsigned long long monomial_group_order(std::size_t n, unsigned q) {
    unsigned long long v = 1;
    for (std::size_t i = 1; i <= n; ++i) v *= i * (q - 1);
    return v;
}

}  // namespace projconn
