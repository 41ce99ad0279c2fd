#pragma once

// Certified paths of projective codes in the Grassmann graph.
//
// Every move changes one thing about the functional tuple (x*_1..x*_n) defining the current code: a scalar on
// one position, the order of two positions, or the point at one position. In each case the old and new
// evaluation maps U, U' agree on a hyperplane H of W, so U(H) = U'(H) is a (k-1)-dimensional subspace of both
// codes and they are adjacent or equal. Each emitted step stores H and U(H) so a certificate can be re-checked
// without trusting the construction.
//
// connect() runs the full argument: re-represent the first code by an automorphism of W* so its point set
// shares k independent points with the target's, swap points one at a time until the point sets agree, then
// move inside the target's equivalence class by transpositions and scalings.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "projconn/codes.hpp"
#include "projconn/error.hpp"
#include "projconn/grassmann.hpp"
#include "projconn/matspace.hpp"
#include "projconn/projective.hpp"

namespace projconn {

enum class StepKind { Scale, Transpose, Swap };

inline const char* to_string(StepKind k) {
    switch (k) {
        case StepKind::Scale: return "scale";
        case StepKind::Transpose: return "transpose";
        case StepKind::Swap: return "swap";
    }
    return "?";
}

struct PathStep {
    StepKind kind;
    std::size_t i = 0;
    std::size_t j = 0;             // transpose only
    Raw scalar = 0;                // scale only
    Vec old_functional;            // swap only
    Vec new_functional;            // swap only
    Subspace witness;              // H in W = GF(q)^k, dimension k-1
    Subspace image;                // U(H) in GF(q)^n, contained in both endpoint codes
};

struct PathCertificate {
    std::vector<LinearCode> vertices;
    std::vector<PathStep> steps;
    std::size_t swap_stages = 0;  // number of point-set swaps performed (t)
    std::size_t compressed = 0;   // moves whose endpoints coincided and were dropped

    std::size_t length() const noexcept { return steps.size(); }
    const LinearCode& front() const { return vertices.front(); }
    const LinearCode& back() const { return vertices.back(); }
};

struct StepResult {
    FunctionalTuple next;
    PathStep step;
};

/// A partial path together with the tuple it ends on.
struct ChainResult {
    PathCertificate path;
    FunctionalTuple end;
};

namespace detail {

// Kernel of the functional f - g, a hyperplane of W when f != g.
inline Subspace kernel_of_difference(const FieldCtx& ctx, const Vec& f, const Vec& g) {
    Matrix row(ctx, 1, f.size());
    bool nonzero = false;
    for (std::size_t c = 0; c < f.size(); ++c) {
        row(0, c) = ctx.sub(f[c], g[c]);
        nonzero = nonzero || row(0, c) != 0;
    }
    if (!nonzero) throw Error(ErrorKind::Internal, "equal functionals give no hyperplane");
    return kernel(row);
}

inline Subspace image_under(const Subspace& h, const FunctionalTuple& t) {
    return Subspace::span(h.basis() * t.generator());
}

class PathBuilder {
   public:
    explicit PathBuilder(FunctionalTuple start) : cur_(std::move(start)) {
        cert_.vertices.push_back(code_from_functionals(cur_));
    }

    void push(StepResult r) {
        LinearCode next = code_from_functionals(r.next);
        if (next == cert_.vertices.back()) {
            ++cert_.compressed;
        } else {
            cert_.vertices.push_back(std::move(next));
            cert_.steps.push_back(std::move(r.step));
        }
        cur_ = std::move(r.next);
    }

    void append(ChainResult&& part) {
        cert_.compressed += part.path.compressed;
        cert_.swap_stages += part.path.swap_stages;
        for (std::size_t s = 0; s < part.path.steps.size(); ++s) {
            cert_.vertices.push_back(std::move(part.path.vertices[s + 1]));
            cert_.steps.push_back(std::move(part.path.steps[s]));
        }
        cur_ = std::move(part.end);
    }

    const FunctionalTuple& current() const noexcept { return cur_; }
    PathCertificate& cert() noexcept { return cert_; }
    ChainResult finish() && { return {std::move(cert_), std::move(cur_)}; }

   private:
    FunctionalTuple cur_;
    PathCertificate cert_;
};

}  // namespace detail

/// x*_i -> a x*_i, witnessed by H = ker x*_i.
inline StepResult scale_step(const FunctionalTuple& t, std::size_t i, Raw a) {
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "scale step by zero");
    if (i >= t.n()) throw Error(ErrorKind::InvalidArgument, "position out of range");
    const FieldCtx& f = t.ctx();
    Vec scaled = t[i];
    for (Raw& x : scaled) x = f.mul(a, x);
    Subspace h = detail::kernel_of_difference(f, t[i], Vec(t.k(), 0));
    Subspace img = detail::image_under(h, t);
    return {t.with(i, std::move(scaled)), PathStep{StepKind::Scale, i, 0, a, {}, {}, std::move(h), std::move(img)}};
}

/// Exchanges positions i and j, witnessed by H = ker(x*_i - x*_j).
inline StepResult transpose_step(const FunctionalTuple& t, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "transposition needs two distinct positions");
    if (i >= t.n() || j >= t.n()) throw Error(ErrorKind::InvalidArgument, "position out of range");
    Subspace h = detail::kernel_of_difference(t.ctx(), t[i], t[j]);
    Subspace img = detail::image_under(h, t);
    return {t.swapped(i, j), PathStep{StepKind::Transpose, i, j, 0, {}, {}, std::move(h), std::move(img)}};
}

/// Replaces x*_i by y, witnessed by H = ker(x*_i - y). The new tuple must still satisfy both tuple conditions.
inline StepResult swap_step(const FunctionalTuple& t, std::size_t i, const Vec& y) {
    if (i >= t.n()) throw Error(ErrorKind::InvalidArgument, "position out of range");
    if (y.size() != t.k()) throw Error(ErrorKind::DimensionMismatch, "replacement functional length != k");
    if (y == t[i]) throw Error(ErrorKind::InvalidArgument, "swap with the identical functional is not a move");
    FunctionalTuple next = t.with(i, y);
    Subspace h = detail::kernel_of_difference(t.ctx(), t[i], y);
    Subspace img = detail::image_under(h, t);
    return {std::move(next), PathStep{StepKind::Swap, i, 0, 0, t[i], y, std::move(h), std::move(img)}};
}

/// Scales the first i positions for i = 1..n, so C_i = C(a_1 x*_1, ..., a_i x*_i, x*_{i+1}, ...).
inline ChainResult scalar_chain(const FunctionalTuple& t, std::span<const Raw> a) {
    if (a.size() != t.n()) throw Error(ErrorKind::DimensionMismatch, "one scalar per position required");
    for (Raw s : a)
        if (s == 0) throw Error(ErrorKind::InvalidArgument, "zero scalar in scalar chain");
    detail::PathBuilder b(t);
    for (std::size_t i = 0; i < t.n(); ++i)
        if (a[i] != 1) b.push(scale_step(b.current(), i, a[i]));
    return std::move(b).finish();
}

/// Rearranges t so that position p ends up holding t[sigma[p]]. Cycles are handled in order of their smallest
/// position; within a cycle the item at that position is sent home repeatedly, for at most n-1 transpositions.
inline ChainResult permutation_chain(const FunctionalTuple& t, std::span<const std::size_t> sigma) {
    const std::size_t n = t.n();
    if (sigma.size() != n) throw Error(ErrorKind::DimensionMismatch, "permutation length != n");
    std::vector<std::size_t> dest(n, n);  // dest[o] = final position of the item originally at o
    for (std::size_t p = 0; p < n; ++p) {
        if (sigma[p] >= n || dest[sigma[p]] != n) throw Error(ErrorKind::InvalidArgument, "sigma is not a permutation");
        dest[sigma[p]] = p;
    }
    std::vector<std::size_t> origin(n);
    for (std::size_t p = 0; p < n; ++p) origin[p] = p;
    detail::PathBuilder b(t);
    for (std::size_t p = 0; p < n; ++p)
        while (origin[p] != sigma[p]) {
            const std::size_t target = dest[origin[p]];
            b.push(transpose_step(b.current(), p, target));
            std::swap(origin[p], origin[target]);
        }
    return std::move(b).finish();
}

namespace detail {

inline std::size_t position_of(const FunctionalTuple& t, const ProjPoint& p) {
    for (std::size_t i = 0; i < t.n(); ++i)
        if (ProjPoint::of(t.ctx(), t[i]) == p) return i;
    throw Error(ErrorKind::Internal, "point not present in tuple");
}

// Swap points until the point sets agree: always the least point of cur \ target for the least of target \ cur.
inline void swap_stage(PathBuilder& b, const FunctionalTuple& target) {
    const auto want = target.point_set();
    while (true) {
        const auto have = b.current().point_set();
        if (have == want) return;
        std::vector<ProjPoint> out_only, in_only;
        std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(out_only));
        std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(in_only));
        const std::size_t i = position_of(b.current(), out_only.front());
        b.push(swap_step(b.current(), i, in_only.front().rep()));
        ++b.cert().swap_stages;
    }
}

// Same point set as target: permute positions into target order, then fix the scalars.
inline void class_stage(PathBuilder& b, const FunctionalTuple& target) {
    const FieldCtx& f = target.ctx();
    const std::size_t n = target.n();
    std::vector<std::size_t> sigma(n);
    for (std::size_t p = 0; p < n; ++p) sigma[p] = position_of(b.current(), ProjPoint::of(f, target[p]));
    b.append(permutation_chain(b.current(), sigma));

    Vec scalars(n);
    for (std::size_t p = 0; p < n; ++p) {
        const auto [pt_cur, s_cur] = ProjPoint::normalize(f, b.current()[p]);
        const auto [pt_dst, s_dst] = ProjPoint::normalize(f, target[p]);
        if (!(pt_cur == pt_dst)) throw Error(ErrorKind::Internal, "class stage: permutation left a mismatch");
        scalars[p] = f.div(s_dst, s_cur);
    }
    b.append(scalar_chain(b.current(), scalars));
    if (!(b.current() == target)) throw Error(ErrorKind::Internal, "class stage: tuple differs from target");
}

inline void require_same_params(const LinearCode& a, const LinearCode& b) {
    if (!(a.params() == b.params())) throw Error(ErrorKind::DimensionMismatch, "codes have different (n, k, q)");
}

}  // namespace detail

/// Certified path of projective codes from `from` to `to`. Never more than n-k swap stages.
inline PathCertificate connect(const LinearCode& from, const LinearCode& to) {
    detail::require_same_params(from, to);
    if (!from.is_projective() || !to.is_projective())
        throw Error(ErrorKind::NotProjective, "connect needs two projective codes");

    const FunctionalTuple x = FunctionalTuple::of_code(from);
    const FunctionalTuple y = FunctionalTuple::of_code(to);

    // Re-represent `from` so that its point set contains the greedy independent subset of `to`.
    const auto ix = independent_subset(x);
    const auto iy = independent_subset(y);
    const Matrix l = dual_automorphism_aligning(x, ix, y, iy);
    const FunctionalTuple aligned = transform(l, x);
    if (!(code_from_functionals(aligned) == from)) throw Error(ErrorKind::Internal, "alignment changed the code");

    detail::PathBuilder b(aligned);
    detail::swap_stage(b, y);
    detail::class_stage(b, y);

    PathCertificate cert = std::move(b).finish().path;
    if (!(cert.back() == to)) throw Error(ErrorKind::Internal, "connect: endpoint mismatch");
    if (cert.swap_stages > from.n() - from.k())
        throw Error(ErrorKind::Internal, "connect: swap stages exceed n-k");
    return cert;
}

/// Path of MDS codes between the codes of two tuples whose combined point set is an arc.
inline PathCertificate mds_chain(const FunctionalTuple& x, const FunctionalTuple& y) {
    if (x.k() != y.k() || x.n() != y.n() || !(x.ctx() == y.ctx()))
        throw Error(ErrorKind::DimensionMismatch, "tuples have different (n, k, q)");
    if (!code_from_functionals(x).is_mds_arc() || !code_from_functionals(y).is_mds_arc())
        throw Error(ErrorKind::InvalidArgument, "mds_chain needs two MDS codes");
    std::vector<ProjPoint> uni;
    const auto px = x.point_set(), py = y.point_set();
    std::set_union(px.begin(), px.end(), py.begin(), py.end(), std::back_inserter(uni));
    std::vector<Vec> reps;
    for (const auto& p : uni) reps.push_back(p.rep());
    if (!LinearCode::columns_form_arc(Matrix::from_columns(x.ctx(), x.k(), reps)))
        throw Error(ErrorKind::NoArcChain, "the union of the two point sets (" + std::to_string(uni.size()) +
                                               " points) is not an arc");

    detail::PathBuilder b(x);
    detail::swap_stage(b, y);
    detail::class_stage(b, y);
    return std::move(b).finish().path;
}

/// mds_chain on the RREF functional tuples of two MDS codes.
inline PathCertificate mds_chain(const LinearCode& from, const LinearCode& to) {
    detail::require_same_params(from, to);
    if (!from.is_projective() || !to.is_projective())
        throw Error(ErrorKind::InvalidArgument, "mds_chain needs two MDS codes");
    PathCertificate cert = mds_chain(FunctionalTuple::of_code(from), FunctionalTuple::of_code(to));
    if (!(cert.back() == to)) throw Error(ErrorKind::Internal, "mds_chain: endpoint mismatch");
    return cert;
}

enum class PathPredicate { Projective, Mds };

struct VerifyResult {
    bool ok = true;
    std::optional<std::size_t> index;  // offending vertex or step
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
    static VerifyResult fail(std::optional<std::size_t> at, std::string why) { return {false, at, std::move(why)}; }
};

/// Re-checks a certificate from first principles: shapes, the predicate on every vertex, adjacency of every
/// consecutive pair by intersection rank, every witness (dim H = k-1, dim U(H) = k-1, U(H) inside both codes),
/// optional endpoints, and for projective paths the n-k bound on swap stages.
inline VerifyResult verify_certificate(const PathCertificate& p, PathPredicate predicate,
                                       const LinearCode* expected_from = nullptr,
                                       const LinearCode* expected_to = nullptr) {
    if (p.vertices.empty()) return VerifyResult::fail(std::nullopt, "no vertices");
    if (p.steps.size() + 1 != p.vertices.size())
        return VerifyResult::fail(std::nullopt, "step count does not match vertex count");
    const LinearCode& first = p.vertices.front();
    const std::size_t n = first.n(), k = first.k();
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const LinearCode& c = p.vertices[v];
        if (!(c.params() == first.params())) return VerifyResult::fail(v, "vertex has different (n, k, q)");
        if (!c.is_projective()) return VerifyResult::fail(v, "vertex is not projective");
        if (predicate == PathPredicate::Mds && !c.is_mds_arc()) return VerifyResult::fail(v, "vertex is not MDS");
    }
    for (std::size_t s = 0; s < p.steps.size(); ++s) {
        const LinearCode& a = p.vertices[s];
        const LinearCode& b = p.vertices[s + 1];
        if (intersect(a.space(), b.space()).dim() + 1 != k)
            return VerifyResult::fail(s + 1, "consecutive vertices are not adjacent");
        const PathStep& st = p.steps[s];
        if (st.witness.ambient_dim() != k || st.witness.dim() + 1 != k)
            return VerifyResult::fail(s, "witness is not a hyperplane of W");
        if (st.image.ambient_dim() != n || st.image.dim() + 1 != k)
            return VerifyResult::fail(s, "witness image is not (k-1)-dimensional");
        if (!a.space().contains(st.image) || !b.space().contains(st.image))
            return VerifyResult::fail(s, "witness image not contained in both codes");
    }
    if (expected_from && !(first == *expected_from)) return VerifyResult::fail(0, "start is not the requested code");
    if (expected_to && !(p.vertices.back() == *expected_to))
        return VerifyResult::fail(p.vertices.size() - 1, "end is not the requested code");
    if (predicate == PathPredicate::Projective && p.swap_stages > n - k)
        return VerifyResult::fail(std::nullopt, "more than n-k swap stages");
    return {};
}

}  // namespace projconn
