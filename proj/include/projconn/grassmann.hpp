#pragma once

// The Grassmann graph on k-dimensional subspaces of GF(q)^n: two vertices are adjacent when they meet in
// dimension k-1, and the graph distance is k - dim(x ∩ y).

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "projconn/error.hpp"
#include "projconn/field.hpp"
#include "projconn/matspace.hpp"

namespace projconn {

struct GrassmannParams {
    FieldCtx ctx;
    std::size_t n = 0;
    std::size_t k = 0;

    /// Graph-level operations need 1 < k < n-1.
    void require_graph_range() const {
        if (k == 1 || (n >= 1 && k == n - 1))
            throw Error(ErrorKind::InvalidArgument,
                        "k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                            ": for k = 1 or k = n-1 any two distinct vertices are adjacent; require 1 < k < n-1");
        if (!(1 < k && k + 1 < n))
            throw Error(ErrorKind::InvalidArgument, "require 1 < k < n-1, got n=" + std::to_string(n) +
                                                        ", k=" + std::to_string(k));
    }

    friend bool operator==(const GrassmannParams& a, const GrassmannParams& b) {
        return a.n == b.n && a.k == b.k && a.ctx == b.ctx;
    }
};

namespace detail {
inline void require_same_vertex_type(const Subspace& x, const Subspace& y) {
    require_same_ambient(x, y);
    if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different dimension");
}
}  // namespace detail

inline std::size_t distance(const Subspace& x, const Subspace& y) {
    detail::require_same_vertex_type(x, y);
    return x.dim() - intersect(x, y).dim();
}

inline bool adjacent(const Subspace& x, const Subspace& y) { return distance(x, y) == 1; }

/// Every vertex adjacent to x, once each, in order of first generation: hyperplanes h of x (enumeration order
/// of GF(q)^k) crossed with normalized lines l outside x, canonicalized as h + l.
inline std::vector<Subspace> neighbors(const Subspace& x) {
    const FieldCtx& f = x.ctx();
    const std::size_t n = x.ambient_dim(), k = x.dim();
    GrassmannParams{f, n, k}.require_graph_range();

    std::vector<Matrix> hyperplanes;
    for_each_subspace(f, k, k - 1, [&](const Subspace& h) { hyperplanes.push_back(h.basis() * x.basis()); });

    std::vector<Vec> outside;
    for (auto& v : normalized_vectors(f, n))
        if (!x.contains(v)) outside.push_back(std::move(v));

    std::vector<Subspace> out;
    std::unordered_set<std::string> seen;
    for (const Matrix& h : hyperplanes) {
        Matrix m(f, k, n);
        for (std::size_t r = 0; r + 1 < k; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = h(r, c);
        for (const Vec& line : outside) {
            for (std::size_t c = 0; c < n; ++c) m(k - 1, c) = line[c];
            Subspace y = Subspace::span(m);
            if (seen.insert(y.key()).second) out.push_back(std::move(y));
        }
    }
    return out;
}

/// q * [k]_q * [n-k]_q, the common degree of every vertex.
inline unsigned long long grassmann_degree(std::size_t n, std::size_t k, unsigned q) {
    return q * gaussian_binomial(k, 1, q) * gaussian_binomial(n - k, 1, q);
}

inline std::size_t grassmann_diameter(std::size_t n, std::size_t k) { return std::min(k, n - k); }

}  // namespace projconn
