#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smm/linalg.hpp"

using namespace smm;

TEST(Linalg, RrefIdentity)
{
    auto r = rref_decompose(FieldMatrix::identity(2));
    EXPECT_EQ(r.rref, FieldMatrix::identity(2));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Linalg, RrefZero)
{
    auto r = rref_decompose(FieldMatrix(3, 2));
    EXPECT_TRUE(r.rref.is_zero());
    EXPECT_TRUE(r.pivots.empty());
    EXPECT_EQ(r.rank, 0u);
}

TEST(Linalg, RrefRankOne)
{
    std::vector<std::vector<long long>> a{{1, 2}, {2, 4}};
    auto expected = oracle::rref_ref(a, kDefaultModulus);
    ASSERT_EQ(expected, (std::vector<std::vector<long long>>{{1, 2}, {0, 0}}));
    auto r = rref_decompose(FieldMatrix::from_rows(a));
    EXPECT_EQ(r.rref, FieldMatrix::from_rows(expected));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Linalg, RrefMatchesReferenceOnRandomMatrices)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::size_t rows = rng() % 6, cols = rng() % 6;
        std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
        for (auto& r : a)
            for (auto& x : r) x = (rng() % 3 == 0) ? 0 : static_cast<long long>(rng() % 11);
        if (rows == 0) continue;
        auto r = rref_decompose(FieldMatrix::from_rows(a, 11));
        EXPECT_EQ(r.rref, FieldMatrix::from_rows(oracle::rref_ref(a, 11), 11));
        EXPECT_EQ(rref_decompose(r.rref).rref, r.rref);
        EXPECT_EQ(r.rank + kernel_basis(FieldMatrix::from_rows(a, 11)).cols(), cols);
    }
}

TEST(Linalg, SolveIdentity)
{
    auto s = solve_linear(FieldMatrix::identity(3), {4, 5, 6});
    ASSERT_TRUE(s.consistent());
    EXPECT_EQ(*s.particular, (std::vector<Scalar>{4, 5, 6}));
    EXPECT_EQ(s.kernel.cols(), 0u);
}

TEST(Linalg, SolveZeroSystem)
{
    auto s = solve_linear(FieldMatrix(2, 2), {0, 0});
    ASSERT_TRUE(s.consistent());
    EXPECT_EQ(*s.particular, (std::vector<Scalar>{0, 0}));
    EXPECT_EQ(s.kernel.cols(), 2u);
}

TEST(Linalg, SolveUnderdetermined)
{
    auto a = FieldMatrix::from_rows({{1, 1}});
    auto s = solve_linear(a, {1});
    ASSERT_TRUE(s.consistent());
    EXPECT_EQ(a.apply(*s.particular), (std::vector<Scalar>{1}));
    EXPECT_EQ(s.kernel.cols(), 1u);
    EXPECT_TRUE((a * s.kernel).is_zero());
}

TEST(Linalg, SolveInconsistentAndMismatch)
{
    EXPECT_FALSE(solve_linear(FieldMatrix(1, 1), {1}).consistent());
    EXPECT_THROW(solve_linear(FieldMatrix(2, 2), {1}), LinalgError);
}

TEST(Linalg, KernelCokernel)
{
    auto inv = kernel_cokernel(FieldMatrix::from_rows({{1, 2}, {3, 4}}));
    EXPECT_EQ(inv.kernel.cols(), 0u);
    EXPECT_EQ(inv.cokernel.rows(), 0u);

    auto z = kernel_cokernel(FieldMatrix(2, 3));
    EXPECT_EQ(z.kernel, FieldMatrix::identity(3));
    EXPECT_EQ(z.cokernel, FieldMatrix::identity(2));

    auto a = FieldMatrix::from_rows({{1, 0}, {0, 0}});
    auto kc = kernel_cokernel(a);
    EXPECT_EQ(kc.kernel.cols(), 2 - rank(a));
    EXPECT_EQ(kc.cokernel.rows(), 2 - rank(a));
    EXPECT_TRUE((a * kc.kernel).is_zero());
    EXPECT_TRUE((kc.cokernel * a).is_zero());
}

TEST(Linalg, EmptyMatricesActAsEmptyMaps)
{
    FieldMatrix a(0, 3), b(3, 0);
    EXPECT_EQ((b * a).rows(), 3u);
    EXPECT_TRUE((b * a).is_zero());
    EXPECT_EQ(kernel_basis(a).cols(), 3u);
    EXPECT_EQ(rank(b), 0u);
}

TEST(Linalg, ModulusMixingAndZeroDivision)
{
    EXPECT_THROW(FieldMatrix(1, 1, 5) * FieldMatrix(1, 1, 7), LinalgError);
    EXPECT_THROW(inv_mod(0, 7), LinalgError);
    EXPECT_EQ(mul_mod(inv_mod(3, 7), 3, 7), 1u);
}

TEST(Linalg, InverseAndPower)
{
    auto a = FieldMatrix::from_rows({{2, 1}, {1, 1}});
    auto i = inverse(a);
    ASSERT_TRUE(i.has_value());
    EXPECT_EQ(a * *i, FieldMatrix::identity(2));
    EXPECT_FALSE(inverse(FieldMatrix::from_rows({{1, 2}, {2, 4}})).has_value());
    auto n = FieldMatrix::from_rows({{0, 1}, {0, 0}});
    EXPECT_TRUE(power(n, 2).is_zero());
}

TEST(Linalg, EigenvaluesOfTriangularMatrix)
{
    std::mt19937_64 rng(1);
    auto a = FieldMatrix::from_rows({{3, 1, 0}, {0, 5, 2}, {0, 0, 3}});
    EXPECT_EQ(eigenvalues(a, rng), (std::vector<Scalar>{3, 5}));
    // x^2 + 1 has no roots mod 32003 since 32003 = 3 mod 4.
    EXPECT_TRUE(eigenvalues(FieldMatrix::from_rows({{0, -1}, {1, 0}}), rng).empty());
}

TEST(Linalg, VectorSpanCoordinates)
{
    VectorSpan s(3, kDefaultModulus);
    EXPECT_TRUE(s.insert({1, 1, 0}));
    EXPECT_TRUE(s.insert({0, 1, 1}));
    EXPECT_FALSE(s.insert({1, 2, 1}));
    auto c = s.coordinates({2, 3, 1});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, (std::vector<Scalar>{2, 1}));
    EXPECT_FALSE(s.contains({1, 0, 0}));
}
