#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "projconn/oracle.hpp"
#include "support/brute.hpp"

using namespace projconn;

namespace {

brute::IntMat to_int(const LinearCode& c) {
    brute::IntMat out(c.k(), std::vector<int>(c.n()));
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) out[i][j] = c.gen()(i, j);
    return out;
}

// Same vertex set as the brute-force column enumeration, and identical all-pairs distances.
void cross_check(std::size_t n, std::size_t k, unsigned p, CodePredicate pred) {
    ASSERT_TRUE(pred == CodePredicate::Projective || pred == CodePredicate::NonDegenerate);
    const auto expect = brute::column_codes(static_cast<int>(n), static_cast<int>(k), static_cast<int>(p),
                                            pred == CodePredicate::Projective);
    const auto g = Subgraph::build({FieldCtx::make(p), n, k}, pred);
    ASSERT_EQ(g.size(), expect.size());
    std::vector<brute::IntMat> verts;
    for (const auto& c : g.vertices()) {
        verts.push_back(to_int(c));
        ASSERT_TRUE(expect.count(verts.back()));
    }
    const auto mine = g.all_pairs();
    const auto theirs = brute::all_pairs_by_scan(verts, static_cast<int>(p));
    ASSERT_EQ(mine, theirs);
}

}  // namespace

TEST(Enumerate, PredicateCounts) {
    const auto f2 = FieldCtx::make(2);
    EXPECT_EQ(enumerate_codes({FieldCtx::make(3), 4, 2}, CodePredicate::Projective).size(), 8u);
    EXPECT_EQ(enumerate_codes({f2, 5, 3}, CodePredicate::Projective).size(), 15u);
    EXPECT_EQ(enumerate_codes({f2, 6, 3}, CodePredicate::Projective).size(), 30u);
    EXPECT_EQ(enumerate_codes({f2, 7, 3}, CodePredicate::Projective).size(), 30u);
    EXPECT_EQ(enumerate_codes({f2, 4, 2}, CodePredicate::Projective).size(), 0u);
    EXPECT_EQ(enumerate_codes({f2, 5, 3}, CodePredicate::Any).size(), 155u);
    EXPECT_EQ(enumerate_codes({FieldCtx::make(5), 4, 2}, CodePredicate::Mds).size(),
              enumerate_codes({FieldCtx::make(5), 4, 2}, CodePredicate::Projective).size());
}

TEST(Enumerate, PredicateNames) {
    for (auto p : {CodePredicate::Any, CodePredicate::NonDegenerate, CodePredicate::Projective, CodePredicate::Mds})
        EXPECT_EQ(parse_predicate(to_string(p)), p);
    EXPECT_FALSE(parse_predicate("arc").has_value());
}

TEST(BruteCrossCheck, Projective) {
    cross_check(5, 3, 2, CodePredicate::Projective);
    cross_check(6, 3, 2, CodePredicate::Projective);
    cross_check(4, 2, 3, CodePredicate::Projective);
    cross_check(5, 2, 3, CodePredicate::Projective);
}

TEST(BruteCrossCheck, NonDegenerate) {
    cross_check(5, 3, 2, CodePredicate::NonDegenerate);
    cross_check(4, 2, 3, CodePredicate::NonDegenerate);
}

TEST(Report, ProjectiveInstancesAreConnected) {
    const auto f2 = FieldCtx::make(2);
    for (const auto& params : {GrassmannParams{FieldCtx::make(3), 4, 2}, GrassmannParams{f2, 5, 3},
                               GrassmannParams{f2, 6, 3}, GrassmannParams{f2, 7, 3}}) {
        const auto r = report(params, CodePredicate::Projective);
        EXPECT_EQ(r.component_count, 1u) << params.n << "," << params.k << "," << params.ctx.q();
        EXPECT_EQ(r.pair_count, r.vertex_count * (r.vertex_count - 1) / 2);
    }
}

// Frozen from two independent exhaustive searches: no detours at (5,3,2).
TEST(Report, NonDegenerate532IsConnectedWithoutDetours) {
    const auto r = report({FieldCtx::make(2), 5, 3}, CodePredicate::NonDegenerate);
    EXPECT_EQ(r.vertex_count, 90u);
    EXPECT_EQ(r.component_count, 1u);
    EXPECT_EQ(r.detour_pairs, 0u);
    EXPECT_EQ(r.diameter_within, r.grassmann_diameter);
}

// For k = 2, q = 2 detours first appear at n = (q+1)^2 + k - 2 = 9.
TEST(Report, NonDegenerateDetoursStartAtN9ForK2Q2) {
    const auto f2 = FieldCtx::make(2);
    const auto below = report({f2, 8, 2}, CodePredicate::NonDegenerate);
    EXPECT_EQ(below.vertex_count, 1093u);
    EXPECT_EQ(below.detour_pairs, 0u);
    const auto at = report({f2, 9, 2}, CodePredicate::NonDegenerate);
    EXPECT_EQ(at.vertex_count, 3280u);
    EXPECT_EQ(at.component_count, 1u);
    EXPECT_EQ(at.detour_pairs, 5040u);
    EXPECT_EQ(at.diameter_within, 3u);
}

TEST(Report, UnrestrictedHasNoDetours) {
    const auto r = report({FieldCtx::make(2), 5, 3}, CodePredicate::Any);
    EXPECT_EQ(r.vertex_count, 155u);
    EXPECT_EQ(r.component_count, 1u);
    EXPECT_EQ(r.detour_pairs, 0u);
    EXPECT_EQ(r.diameter_within, 2u);
}

TEST(Bfs, WithinMatchesSubgraph) {
    const auto g = Subgraph::build({FieldCtx::make(2), 5, 3}, CodePredicate::NonDegenerate);
    const auto d = g.bfs(0);
    const auto dist = bfs_within(g.vertices()[0], CodePredicate::NonDegenerate);
    ASSERT_EQ(dist.size(), g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        EXPECT_EQ(static_cast<int>(dist.at(g.vertices()[v].space())), d[v]);
        EXPECT_EQ(distance_within(g.vertices()[0], g.vertices()[v], CodePredicate::NonDegenerate),
                  std::optional<std::size_t>(d[v]));
    }
    EXPECT_THROW((void)bfs_within(g.vertices()[0], CodePredicate::NonDegenerate, 10), BudgetError);
}

TEST(Csv, HeaderAndRowCount) {
    const auto g = Subgraph::build({FieldCtx::make(3), 4, 2}, CodePredicate::Projective);
    std::ostringstream os;
    write_distance_csv(os, g);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "u,v,grassmann,within");
    std::size_t rows = 0;
    while (std::getline(is, line)) ++rows;
    EXPECT_EQ(rows, 8u * 7 / 2);

    const auto big = Subgraph::build({FieldCtx::make(2), 7, 3}, CodePredicate::NonDegenerate);
    ASSERT_GT(big.size(), kCsvVertexLimit);
    std::ostringstream sink;
    EXPECT_THROW(write_distance_csv(sink, big), BudgetError);
}
