#pragma once

// Brute-force ground truth. Everything here is built from subspace enumeration, grassmann::neighbors and the
// code predicates only; nothing calls into the path construction, so results can be used to check it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "projconn/codes.hpp"
#include "projconn/error.hpp"
#include "projconn/grassmann.hpp"
#include "projconn/matspace.hpp"

namespace projconn {

enum class CodePredicate { Any, NonDegenerate, Projective, Mds };

inline const char* to_string(CodePredicate p) {
    switch (p) {
        case CodePredicate::Any: return "any";
        case CodePredicate::NonDegenerate: return "nondegenerate";
        case CodePredicate::Projective: return "projective";
        case CodePredicate::Mds: return "mds";
    }
    return "?";
}

inline std::optional<CodePredicate> parse_predicate(std::string_view s) {
    if (s == "any") return CodePredicate::Any;
    if (s == "nondegenerate" || s == "non-degenerate") return CodePredicate::NonDegenerate;
    if (s == "projective") return CodePredicate::Projective;
    if (s == "mds") return CodePredicate::Mds;
    return std::nullopt;
}

inline bool satisfies(const LinearCode& c, CodePredicate p) {
    switch (p) {
        case CodePredicate::Any: return true;
        case CodePredicate::NonDegenerate: return c.is_nondegenerate();
        case CodePredicate::Projective: return c.is_projective();
        case CodePredicate::Mds: return c.is_projective() && c.is_mds_arc();
    }
    return false;
}

/// All k-subspaces of GF(q)^n passing the predicate, in enumeration order.
inline std::vector<LinearCode> enumerate_codes(const GrassmannParams& params, CodePredicate pred,
                                               unsigned long long budget = kDefaultBudget) {
    std::vector<LinearCode> out;
    for_each_subspace(
        params.ctx, params.n, params.k,
        [&](const Subspace& s) {
            LinearCode c = LinearCode::from_subspace(s);
            if (satisfies(c, pred)) out.push_back(std::move(c));
        },
        budget);
    return out;
}

using DistanceMap = std::unordered_map<Subspace, std::size_t, SubspaceHash>;

/// Breadth-first search from `start` through neighbours that satisfy the predicate. Visits at most `budget`
/// vertices. If `target` is given the search stops as soon as it is reached.
inline DistanceMap bfs_within(const LinearCode& start, CodePredicate pred, unsigned long long budget = kDefaultBudget,
                              const Subspace* target = nullptr) {
    if (!satisfies(start, pred)) throw Error(ErrorKind::InvalidArgument, "start vertex does not satisfy the predicate");
    DistanceMap dist;
    dist.emplace(start.space(), 0);
    std::deque<Subspace> frontier{start.space()};
    while (!frontier.empty()) {
        if (target && dist.count(*target)) break;
        const Subspace x = std::move(frontier.front());
        frontier.pop_front();
        const std::size_t d = dist.at(x);
        for (Subspace& y : neighbors(x)) {
            if (dist.count(y) || !satisfies(LinearCode::from_subspace(y), pred)) continue;
            dist.emplace(y, d + 1);
            if (dist.size() > budget) throw BudgetError("restricted BFS", dist.size(), budget);
            frontier.push_back(std::move(y));
        }
    }
    return dist;
}

/// Within-subgraph distance between two codes, or nullopt when b is unreachable from a.
inline std::optional<std::size_t> distance_within(const LinearCode& a, const LinearCode& b, CodePredicate pred,
                                                  unsigned long long budget = kDefaultBudget) {
    if (!satisfies(b, pred)) return std::nullopt;
    const auto dist = bfs_within(a, pred, budget, &b.space());
    const auto it = dist.find(b.space());
    if (it == dist.end()) return std::nullopt;
    return it->second;
}

/// A predicate-restricted induced subgraph of the Grassmann graph, fully materialized with integer vertex ids.
class Subgraph {
   public:
    static constexpr int kUnreachable = -1;

    static Subgraph build(const GrassmannParams& params, CodePredicate pred, unsigned long long budget = kDefaultBudget) {
        params.require_graph_range();
        Subgraph g;
        g.params_ = params;
        g.pred_ = pred;
        g.vertices_ = enumerate_codes(params, pred, budget);
        for (std::size_t v = 0; v < g.vertices_.size(); ++v) g.index_.emplace(g.vertices_[v].space(), v);
        g.adj_.resize(g.vertices_.size());
        for (std::size_t v = 0; v < g.vertices_.size(); ++v)
            for (const Subspace& y : neighbors(g.vertices_[v].space())) {
                auto it = g.index_.find(y);
                if (it != g.index_.end()) g.adj_[v].push_back(static_cast<std::uint32_t>(it->second));
            }
        return g;
    }

    const GrassmannParams& params() const noexcept { return params_; }
    CodePredicate predicate() const noexcept { return pred_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<LinearCode>& vertices() const noexcept { return vertices_; }
    const std::vector<std::vector<std::uint32_t>>& adjacency() const noexcept { return adj_; }

    std::optional<std::size_t> index_of(const Subspace& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<int> bfs(std::size_t source) const {
        std::vector<int> dist(vertices_.size(), kUnreachable);
        std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(source)};
        dist[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            for (std::uint32_t w : adj_[v])
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    std::vector<std::vector<int>> all_pairs() const {
        std::vector<std::vector<int>> d;
        d.reserve(vertices_.size());
        for (std::size_t v = 0; v < vertices_.size(); ++v) d.push_back(bfs(v));
        return d;
    }

    /// Component id per vertex, ids assigned in order of smallest member.
    std::vector<std::size_t> components() const {
        std::vector<std::size_t> comp(vertices_.size(), vertices_.size());
        std::size_t next = 0;
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            if (comp[v] != vertices_.size()) continue;
            const auto d = bfs(v);
            for (std::size_t w = 0; w < d.size(); ++w)
                if (d[w] != kUnreachable) comp[w] = next;
            ++next;
        }
        return comp;
    }

   private:
    Subgraph() = default;

    GrassmannParams params_{FieldCtx::make(2), 0, 0};
    CodePredicate pred_ = CodePredicate::Any;
    std::vector<LinearCode> vertices_;
    std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

struct SubgraphReport {
    std::size_t n = 0, k = 0;
    unsigned q = 0;
    CodePredicate predicate = CodePredicate::Any;
    std::size_t vertex_count = 0;
    std::size_t component_count = 0;
    std::vector<std::size_t> component_sizes;  // descending
    std::size_t diameter_within = 0;           // largest finite within-subgraph distance
    std::size_t grassmann_diameter = 0;        // largest k - dim(x ∩ y) over pairs in a common component
    std::size_t detour_pairs = 0;              // unordered connected pairs with within distance > k - dim(x ∩ y)
    std::size_t pair_count = 0;                // unordered connected pairs
};

inline SubgraphReport report(const Subgraph& g) {
    SubgraphReport r;
    r.n = g.params().n;
    r.k = g.params().k;
    r.q = g.params().ctx.q();
    r.predicate = g.predicate();
    r.vertex_count = g.size();

    const auto comp = g.components();
    r.component_count = g.size() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    r.component_sizes.assign(r.component_count, 0);
    for (std::size_t c : comp) ++r.component_sizes[c];
    std::sort(r.component_sizes.rbegin(), r.component_sizes.rend());

    for (std::size_t u = 0; u < g.size(); ++u) {
        const auto d = g.bfs(u);
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (d[v] == Subgraph::kUnreachable) continue;
            const std::size_t within = static_cast<std::size_t>(d[v]);
            const std::size_t formula = distance(g.vertices()[u].space(), g.vertices()[v].space());
            ++r.pair_count;
            r.diameter_within = std::max(r.diameter_within, within);
            r.grassmann_diameter = std::max(r.grassmann_diameter, formula);
            if (within > formula) ++r.detour_pairs;
        }
    }
    return r;
}

inline SubgraphReport report(const GrassmannParams& params, CodePredicate pred, unsigned long long budget = kDefaultBudget) {
    return report(Subgraph::build(params, pred, budget));
}

inline constexpr std::size_t kCsvVertexLimit = 500;

/// "u,v,grassmann,within" for every ordered pair u < v; within is empty when unreachable.
inline void write_distance_csv(std::ostream& os, const Subgraph& g) {
    if (g.size() > kCsvVertexLimit) throw BudgetError("pairwise distance CSV", g.size(), kCsvVertexLimit);
    os << "u,v,grassmann,within\n";
    for (std::size_t u = 0; u < g.size(); ++u) {
        const auto d = g.bfs(u);
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            os << u << ',' << v << ',' << distance(g.vertices()[u].space(), g.vertices()[v].space()) << ',';
            if (d[v] != Subgraph::kUnreachable) os << d[v];
            os << '\n';
        }
    }
}

}  // namespace projconn
