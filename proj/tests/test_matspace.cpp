#include <gtest/gtest.h>

#include <random>
#include <unordered_set>

#include "projconn/matspace.hpp"
#include "support/brute.hpp"

using namespace projconn;

namespace {

Matrix M(const FieldCtx& f, std::vector<std::vector<unsigned>> rows) { return Matrix::from_rows(f, rows); }

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

Subspace span_units(const FieldCtx& f, std::size_t n, std::initializer_list<std::size_t> idx) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(unit(n, i));
    return Subspace::span(Matrix::from_row_vectors(f, n, rows));
}

Matrix random_matrix(const FieldCtx& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Raw>(d(rng));
    return m;
}

brute::IntMat to_int(const Matrix& m) {
    brute::IntMat out(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

}  // namespace

TEST(Rref, Examples) {
    const auto f2 = FieldCtx::make(2);
    auto id = rref(Matrix::identity(f2, 2));
    EXPECT_EQ(id.reduced, Matrix::identity(f2, 2));
    EXPECT_EQ(id.rank, 2u);
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

    auto ones = rref(M(f2, {{1, 1}, {1, 1}}));
    EXPECT_EQ(ones.reduced, M(f2, {{1, 1}, {0, 0}}));
    EXPECT_EQ(ones.rank, 1u);

    const auto f3 = FieldCtx::make(3);
    auto r = rref(M(f3, {{0, 1, 2}, {1, 0, 1}}));
    EXPECT_EQ(r.reduced, M(f3, {{1, 0, 1}, {0, 1, 2}}));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, AgreesWithIndependentReductionAndIsIdempotent) {
    std::mt19937_64 rng(7);
    for (unsigned q : {2u, 3u, 5u, 7u}) {
        const auto f = FieldCtx::make(q);
        for (int trial = 0; trial < 200; ++trial) {
            const Matrix m = random_matrix(f, 1 + trial % 5, 1 + trial % 7, rng);
            const auto red = rref(m);
            auto expect = brute::rref(to_int(m), static_cast<int>(q));
            ASSERT_EQ(red.rank, expect.size());
            for (std::size_t i = 0; i < red.rank; ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) ASSERT_EQ(red.reduced(i, j), expect[i][j]);
            EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
            // row space preserved: every original row lies in the span of the reduced rows
            const Subspace s = Subspace::span(m);
            for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_TRUE(s.contains(m.row(i)));
        }
    }
}

TEST(Span, Examples) {
    const auto f2 = FieldCtx::make(2);
    EXPECT_EQ(span_units(f2, 4, {0, 1}).dim(), 2u);
    EXPECT_EQ(span_units(f2, 4, {0, 0}).dim(), 1u);
    EXPECT_EQ(Subspace::span(M(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})).dim(), 2u);
    EXPECT_EQ(brute::rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2), 2u);
    // equal row spaces give equal subspaces
    EXPECT_EQ(Subspace::span(M(f2, {{1, 1, 0}, {0, 1, 1}})), Subspace::span(M(f2, {{1, 0, 1}, {1, 1, 0}})));
}

TEST(Subspace, IntersectSumKernel) {
    const auto f2 = FieldCtx::make(2);
    const auto x = span_units(f2, 4, {0, 1});
    EXPECT_EQ(intersect(x, x), x);
    EXPECT_EQ(intersect(x, span_units(f2, 4, {2, 3})).dim(), 0u);
    const auto meet = intersect(x, span_units(f2, 4, {1, 2}));
    EXPECT_EQ(meet, span_units(f2, 4, {1}));
    EXPECT_EQ(sum(x, span_units(f2, 4, {1, 2})).dim(), 3u);

    const auto f3 = FieldCtx::make(3);
    const Matrix m = M(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    const Subspace k = kernel(m);
    EXPECT_EQ(k.dim(), 2u);
    for (std::size_t r = 0; r < k.dim(); ++r) {
        const Vec v = m.apply(k.basis().row(r));
        EXPECT_EQ(v, Vec(2, 0));
    }
    EXPECT_THROW((void)intersect(x, span_units(f2, 5, {0})), Error);
}

TEST(Subspace, DimensionFormulaExhaustive) {
    const auto f = FieldCtx::make(2);
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Subspace> all;
        for (std::size_t d = 0; d <= n; ++d)
            for (auto& s : enumerate_subspaces(f, n, d)) all.push_back(std::move(s));
        for (const auto& x : all)
            for (const auto& y : all) {
                const auto meet = intersect(x, y);
                ASSERT_EQ(x.dim() + y.dim(), meet.dim() + sum(x, y).dim());
                ASSERT_TRUE(x.contains(meet) && y.contains(meet));
            }
    }
}

TEST(Enumerate, CountsMatchGaussianBinomial) {
    for (unsigned q : {2u, 3u}) {
        const auto f = FieldCtx::make(q);
        for (std::size_t n = 0; n <= 7; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                const auto expect = brute::qbinom(static_cast<int>(n), static_cast<int>(k), static_cast<int>(q));
                ASSERT_EQ(gaussian_binomial(n, k, q), expect);
                if (expect > 200000) continue;
                std::size_t count = 0;
                std::unordered_set<std::string> keys;
                for_each_subspace(f, n, k, [&](const Subspace& s) {
                    ++count;
                    ASSERT_EQ(s.dim(), k);
                    keys.insert(s.key());
                });
                EXPECT_EQ(count, expect) << "n=" << n << " k=" << k << " q=" << q;
                EXPECT_EQ(keys.size(), count);
            }
    }
}

TEST(Enumerate, Examples) {
    const auto f2 = FieldCtx::make(2);
    EXPECT_EQ(enumerate_subspaces(f2, 7, 3).size(), 11811u);
    EXPECT_EQ(enumerate_subspaces(f2, 6, 3).size(), 1395u);
    EXPECT_EQ(enumerate_subspaces(FieldCtx::make(3), 4, 4).size(), 1u);
}

TEST(Enumerate, OrderIsColexPivotsThenOdometer) {
    const auto f2 = FieldCtx::make(2);
    const auto all = enumerate_subspaces(f2, 3, 1);
    ASSERT_EQ(all.size(), 7u);
    // pivot 0 with free entries (c1, c2) odometer, then pivot 1, then pivot 2
    const std::vector<Vec> expect = {{1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].basis().row_vector(0), expect[i]);

    std::vector<std::vector<std::size_t>> subsets;
    for_each_colex_subset(4, 2, [&](const auto& s) { subsets.push_back(s); });
    const std::vector<std::vector<std::size_t>> colex = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    EXPECT_EQ(subsets, colex);
}

TEST(Enumerate, BudgetRefusalCarriesCount) {
    try {
        (void)enumerate_subspaces(FieldCtx::make(2), 7, 3, 1000);
        FAIL();
    } catch (const BudgetError& e) {
        EXPECT_EQ(e.count(), 11811u);
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(Matrix, InverseAndProduct) {
    std::mt19937_64 rng(3);
    const auto f = FieldCtx::make(5);
    int invertible = 0;
    for (int t = 0; t < 100; ++t) {
        const Matrix m = random_matrix(f, 3, 3, rng);
        const auto inv = inverse(m);
        EXPECT_EQ(inv.has_value(), rank(m) == 3);
        if (inv) {
            ++invertible;
            EXPECT_EQ(m * *inv, Matrix::identity(f, 3));
        }
    }
    EXPECT_GT(invertible, 50);
}

TEST(NormalizedVectors, CountsPoints) {
    EXPECT_EQ(normalized_vectors(FieldCtx::make(2), 3).size(), 7u);
    EXPECT_EQ(normalized_vectors(FieldCtx::make(3), 2).size(), 4u);
    EXPECT_EQ(normalized_vectors(FieldCtx::make(4), 3).size(), 21u);
}
