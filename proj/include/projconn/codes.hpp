#pragma once

// Linear [n,k]_q codes, their projective systems, and the non-degenerate / projective / MDS predicates.
//
// A code is a k-dimensional subspace of GF(q)^n and is identified with its RREF generator matrix. Column j of
// that matrix is the coordinate functional e*_j restricted to the code, written in the basis dual to the rows,
// so the projective system is read off the columns.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "projconn/error.hpp"
#include "projconn/field.hpp"
#include "projconn/grassmann.hpp"
#include "projconn/matspace.hpp"

namespace projconn {

/// A point of the projective space of GF(q)^k: a non-zero vector scaled so its first non-zero entry is 1.
class ProjPoint {
   public:
    /// Point spanned by v; throws on the zero vector.
    static ProjPoint of(const FieldCtx& ctx, std::span<const Raw> v) { return normalize(ctx, v).first; }

    /// The point of v together with the scalar s such that v = s * rep.
    static std::pair<ProjPoint, Raw> normalize(const FieldCtx& ctx, std::span<const Raw> v) {
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) throw Error(ErrorKind::InvalidArgument, "the zero vector spans no projective point");
        const Raw s = v[lead];
        const Raw s_inv = ctx.inv(s);
        Vec rep(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rep[i] = ctx.mul(v[i], s_inv);
        return {ProjPoint(std::move(rep)), s};
    }

    const Vec& rep() const noexcept { return rep_; }
    std::size_t dim() const noexcept { return rep_.size(); }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

   private:
    explicit ProjPoint(Vec rep) : rep_(std::move(rep)) {}
    Vec rep_;
};

/// Ordered points P_1..P_n in coordinates of the dual of the RREF basis; order is significant.
struct ProjectiveSystem {
    std::vector<ProjPoint> points;
};

/// Rank of the representatives of the given points.
inline std::size_t point_rank(const FieldCtx& ctx, std::span<const ProjPoint> points) {
    if (points.empty()) return 0;
    std::vector<Vec> rows;
    for (const auto& p : points) rows.push_back(p.rep());
    return rank(Matrix::from_row_vectors(ctx, points.front().dim(), rows));
}

class LinearCode {
   public:
    /// Row space of a full-rank k x n generator matrix.
    static LinearCode from_generator(const Matrix& rows) {
        Subspace s = Subspace::span(rows);
        if (s.dim() != rows.rows())
            throw Error(ErrorKind::NotGeneratorMatrix, "rank " + std::to_string(s.dim()) + " < " +
                                                           std::to_string(rows.rows()) + " rows");
        return LinearCode(std::move(s));
    }
    static LinearCode from_subspace(Subspace s) { return LinearCode(std::move(s)); }

    GrassmannParams params() const { return {space_.ctx(), n(), k()}; }
    const FieldCtx& ctx() const noexcept { return space_.ctx(); }
    std::size_t n() const noexcept { return space_.ambient_dim(); }
    std::size_t k() const noexcept { return space_.dim(); }
    const Subspace& space() const noexcept { return space_; }
    const Matrix& gen() const noexcept { return space_.basis(); }

    bool is_nondegenerate() const noexcept { return nondegenerate_; }
    bool is_projective() const noexcept { return projective_; }

    ProjectiveSystem projective_system() const {
        if (!nondegenerate_) throw Error(ErrorKind::InvalidArgument, "degenerate code has a zero coordinate functional");
        ProjectiveSystem sys;
        for (const Vec& col : gen().columns()) sys.points.push_back(ProjPoint::of(ctx(), col));
        return sys;
    }

    /// Every k columns independent, i.e. the projective system is an n-arc. Computed once per code value.
    bool is_mds_arc() const {
        if (!projective_) throw Error(ErrorKind::NotProjective, "MDS/arc test needs a projective code");
        std::call_once(mds_->once, [this] { mds_->value = columns_form_arc(gen()); });
        return mds_->value;
    }

    /// True iff every k-subset of the columns of a k x n matrix has rank k.
    static bool columns_form_arc(const Matrix& cols) {
        const std::size_t k = cols.rows();
        bool ok = true;
        for_each_colex_subset(cols.cols(), k, [&](const std::vector<std::size_t>& idx) {
            if (ok && rank(cols.select_columns(idx)) < k) ok = false;
        });
        return ok;
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.space_ == b.space_; }

   private:
    struct MdsCache {
        std::once_flag once;
        bool value = false;
    };

    explicit LinearCode(Subspace s) : space_(std::move(s)), mds_(std::make_shared<MdsCache>()) {
        nondegenerate_ = true;
        std::vector<ProjPoint> pts;
        for (const Vec& col : gen().columns()) {
            if (std::all_of(col.begin(), col.end(), [](Raw x) { return x == 0; })) {
                nondegenerate_ = false;
                break;
            }
            pts.push_back(ProjPoint::of(ctx(), col));
        }
        projective_ = false;
        if (nondegenerate_) {
            std::sort(pts.begin(), pts.end());
            projective_ = std::adjacent_find(pts.begin(), pts.end()) == pts.end();
        }
    }

    Subspace space_;
    bool nondegenerate_ = false;
    bool projective_ = false;
    std::shared_ptr<MdsCache> mds_;
};

struct LinearCodeHash {
    std::size_t operator()(const LinearCode& c) const noexcept { return SubspaceHash{}(c.space()); }
};

/// Number of points of PG(k-1, q): the largest n admitting a projective [n,k]_q code.
inline unsigned long long max_projective_length(std::size_t k, unsigned q) { return gaussian_binomial(k, 1, q); }

}  // namespace projconn
