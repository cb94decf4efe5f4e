#include <random>

#include <gtest/gtest.h>

#include "qltc/bit_matrix.hpp"
#include "support.hpp"

using namespace qltc;

namespace {

BitMatrix h3() { return BitMatrix::from_strings({"110", "011"}); }

BitVector bits(const char* s) { return BitVector::from_string(s); }

}  // namespace

TEST(BitVector, WeightAndStringRoundTrip) {
    const BitVector v = bits("1011");
    EXPECT_EQ(weight(v), 3u);
    EXPECT_EQ(v.to_string(), "1011");
    EXPECT_TRUE(BitVector(0).is_zero());
    EXPECT_THROW(BitVector::from_string("10a"), ParseError);
}

TEST(BitVector, WordBoundary) {
    BitVector v(130);
    v.set(0);
    v.set(63);
    v.set(64);
    v.set(129);
    EXPECT_EQ(v.weight(), 4u);
    v.flip(64);
    EXPECT_FALSE(v.get(64));
    EXPECT_EQ(v.weight(), 3u);
}

TEST(Mul, Examples) {
    EXPECT_EQ(mul(BitMatrix::identity(3), bits("101")), bits("101"));
    EXPECT_EQ(mul(h3(), bits("111")), bits("00"));
    EXPECT_EQ(mul(h3(), bits("100")), bits("10"));
    EXPECT_THROW(mul(h3(), bits("10")), DimensionError);
}

TEST(Mul, MatchesTripleLoop) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = rng() % 13, k = rng() % 13, c = rng() % 13;
        const BitMatrix a = naive::random_matrix(rng, r, k), b = naive::random_matrix(rng, k, c);
        EXPECT_EQ(naive::to_dense(mul(a, b)), naive::mul(naive::to_dense(a), naive::to_dense(b), k, c));
    }
}

TEST(Mul, Associative) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + rng() % 12, k = 1 + rng() % 12, c = 1 + rng() % 12;
        const BitMatrix a = naive::random_matrix(rng, r, k), b = naive::random_matrix(rng, k, c);
        BitVector v(c);
        for (std::size_t i = 0; i < c; ++i) v.set(i, rng() & 1U);
        EXPECT_EQ(mul(mul(a, b), v), mul(a, mul(b, v)));
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(BitMatrix::identity(4)), 4u);
    EXPECT_EQ(rank(BitMatrix(3, 5)), 0u);
    EXPECT_EQ(rank(h3()), 2u);
    EXPECT_EQ(rank(BitMatrix(0, 4)), 0u);
    EXPECT_EQ(rank(BitMatrix(4, 0)), 0u);
}

TEST(Rank, MatchesSpanEnumeration) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = rng() % 10, c = rng() % 10;
        const BitMatrix a = naive::random_matrix(rng, r, c, trial % 3 == 0 ? 0.2 : 0.5);
        EXPECT_EQ(rank(a), naive::rank(naive::to_dense(a), c));
    }
}

TEST(Kernel, Examples) {
    EXPECT_TRUE(kernel_basis(BitMatrix::identity(3)).empty());
    const auto k = kernel_basis(h3());
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], bits("111"));
    EXPECT_EQ(kernel_basis(BitMatrix(2, 3)).size(), 3u);
}

TEST(Kernel, RankNullity) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = rng() % 12, c = rng() % 12;
        const BitMatrix a = naive::random_matrix(rng, r, c);
        const auto basis = kernel_basis(a);
        EXPECT_EQ(rank(a) + basis.size(), c);
        for (const auto& v : basis) EXPECT_TRUE(mul(a, v).is_zero());
        // the basis spans the whole brute-force kernel
        EXPECT_EQ(std::size_t{1} << basis.size(), naive::kernel(naive::to_dense(a), c).size());
    }
}

TEST(Solve, Examples) {
    EXPECT_EQ(solve(BitMatrix::identity(3), bits("010")), bits("010"));
    const auto x = solve(h3(), bits("10"));
    ASSERT_TRUE(x);
    EXPECT_EQ(mul(h3(), *x), bits("10"));
    const auto y = solve(BitMatrix::from_strings({"11"}), bits("1"));
    ASSERT_TRUE(y);
    EXPECT_EQ(y->weight(), 1u);
    EXPECT_FALSE(solve(BitMatrix::from_strings({"11", "11"}), bits("10")));
    EXPECT_THROW(solve(h3(), bits("1")), DimensionError);
}

TEST(Solve, SucceedsIffInColumnSpan) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = rng() % 7;
        const BitMatrix a = naive::random_matrix(rng, r, c, 0.4);
        const auto column_span = naive::row_span(naive::to_dense(transpose(a)), r);
        for (std::uint64_t bi = 0; bi < (std::uint64_t{1} << r); ++bi) {
            BitVector b(r);
            for (std::size_t i = 0; i < r; ++i) b.set(i, (bi >> i) & 1U);
            const auto x = solve(a, b);
            EXPECT_EQ(x.has_value(), column_span.count(naive::to_word(b)) == 1);
            if (x) {
                EXPECT_EQ(mul(a, *x), b);
            }
        }
    }
}

TEST(Kron, Examples) {
    EXPECT_EQ(kron(BitMatrix::identity(2), BitMatrix::identity(3)), BitMatrix::identity(6));
    EXPECT_EQ(kron(BitMatrix::from_strings({"11"}), BitMatrix::identity(2)), BitMatrix::from_strings({"1010", "0101"}));
    const BitMatrix e = kron(h3(), BitMatrix(0, 0));
    EXPECT_EQ(e.rows(), 0u);
    EXPECT_EQ(e.cols(), 0u);
}

TEST(Kron, EntrywiseDefinition) {
    std::mt19937_64 rng(16);
    const BitMatrix a = naive::random_matrix(rng, 3, 4), b = naive::random_matrix(rng, 2, 5);
    const BitMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6u);
    ASSERT_EQ(k.cols(), 20u);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = 0; q < 5; ++q) EXPECT_EQ(k.get(i * 2 + j, p * 5 + q), a.get(i, p) && b.get(j, q));
}

TEST(Kron, MixedProduct) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t ar = 1 + rng() % 4, ac = 1 + rng() % 4, cc = 1 + rng() % 4;
        const std::size_t br = 1 + rng() % 4, bc = 1 + rng() % 4, dc = 1 + rng() % 4;
        const BitMatrix a = naive::random_matrix(rng, ar, ac), c = naive::random_matrix(rng, ac, cc);
        const BitMatrix b = naive::random_matrix(rng, br, bc), d = naive::random_matrix(rng, bc, dc);
        EXPECT_EQ(mul(kron(a, b), kron(c, d)), kron(mul(a, c), mul(b, d)));
    }
}

TEST(Block, Examples) {
    const BitMatrix i5 = block(BlockGrid{{BitMatrix::identity(2), std::nullopt}, {std::nullopt, BitMatrix::identity(3)}});
    EXPECT_EQ(i5, BitMatrix::identity(5));

    const BitMatrix row = block(BlockGrid{{transpose(h3()), kron(BitMatrix::identity(3), BitMatrix::from_strings({"11"}))}});
    EXPECT_EQ(row.rows(), 3u);
    EXPECT_EQ(row.cols(), 2u + 6u);

    EXPECT_THROW(block(BlockGrid{{BitMatrix::identity(2), BitMatrix::identity(3)}}), DimensionError);
}

TEST(Block, ExplicitDimensionsAllowEmptyBlocks) {
    const std::vector<std::size_t> heights{2, 0}, widths{1, 3};
    const BitMatrix m = block(BlockGrid{{std::nullopt, BitMatrix::from_strings({"101", "010"})}, {std::nullopt, std::nullopt}}, heights, widths);
    EXPECT_EQ(m, BitMatrix::from_strings({"0101", "0010"}));
}

TEST(Elementary, TransposeAddWeights) {
    std::mt19937_64 rng(18);
    const BitMatrix a = naive::random_matrix(rng, 5, 7);
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_TRUE(add(a, a).is_zero());
    EXPECT_THROW(add(a, transpose(a)), DimensionError);
    EXPECT_EQ(col_weights(h3()), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(row_weights(h3()), (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(weight(bits("1011")), 3u);
}

TEST(NonsingularPartition, Examples) {
    auto p = nonsingular_row_partition(BitMatrix::identity(3));
    EXPECT_EQ(p.nonsingular, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(p.rest.empty());

    p = nonsingular_row_partition(transpose(h3()));
    EXPECT_EQ(p.nonsingular, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(p.rest, (std::vector<std::size_t>{2}));

    p = nonsingular_row_partition(BitMatrix::from_strings({"10", "10", "01"}));
    EXPECT_EQ(p.nonsingular, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(p.rest, (std::vector<std::size_t>{1}));

    EXPECT_THROW(nonsingular_row_partition(BitMatrix::from_strings({"11", "11"})), DimensionError);
}

TEST(NonsingularPartition, SquareBlockIsInvertible) {
    std::mt19937_64 rng(19);
    int checked = 0;
    while (checked < 30) {
        const std::size_t cols = 1 + rng() % 5, rows = cols + rng() % 5;
        const BitMatrix a = naive::random_matrix(rng, rows, cols);
        if (rank(a) != cols) continue;
        const auto p = nonsingular_row_partition(a);
        EXPECT_EQ(p.nonsingular.size(), cols);
        EXPECT_EQ(p.nonsingular.size() + p.rest.size(), rows);
        EXPECT_EQ(rank(row_submatrix(a, p.nonsingular)), cols);
        const auto again = nonsingular_row_partition(a);
        EXPECT_EQ(again.nonsingular, p.nonsingular);
        ++checked;
    }
}

TEST(RowBasis, CoordinatesRecoverCombination) {
    RowBasis b(6);
    EXPECT_TRUE(b.insert(bits("110000")));
    EXPECT_TRUE(b.insert(bits("011000")));
    EXPECT_FALSE(b.insert(bits("101000")));
    EXPECT_TRUE(b.contains(bits("101000")));
    EXPECT_FALSE(b.contains(bits("000001")));
    EXPECT_EQ(b.dim(), 2u);
}
