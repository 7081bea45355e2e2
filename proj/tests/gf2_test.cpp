#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ssc/errors.hpp"
#include "ssc/gf2.hpp"
#include "test_util.hpp"

using namespace ssc;

TEST_CASE("bit vector basics") {
    BitVector v{1, 0};
    CHECK(v.size() == 2);
    CHECK(v.to_index() == 2); // most significant bit first
    CHECK(v.to_string() == "10");
    CHECK(BitVector::from_index(2, 2) == v);
    CHECK(BitVector::parse("10") == v);
    CHECK(BitVector(3).is_zero());
    CHECK((BitVector{1, 0, 1} ^ BitVector{1, 1, 0}) == BitVector{0, 1, 1});

    CHECK_THROWS_AS(BitVector({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BitVector::parse("1x0"), std::invalid_argument);
    CHECK_THROWS_AS(BitVector::from_index(4, 2), std::invalid_argument);
    CHECK_THROWS_AS((BitVector{1, 0} ^ BitVector{1}), DimensionError);
}

TEST_CASE("bit matrix construction") {
    CHECK_THROWS_AS(BitMatrix(0, 3), DimensionError);
    CHECK_THROWS_AS(BitMatrix::from_rows({{1, 0}, {1}}), DimensionError);
    CHECK_THROWS_AS(BitMatrix::from_rows({{1, 2}}), std::invalid_argument);

    const BitMatrix eye = BitMatrix::identity(2);
    CHECK(eye(0, 0) == 1);
    CHECK(eye(0, 1) == 0);
}

TEST_CASE("matmul") {
    const BitMatrix a = BitMatrix::from_rows({{1, 1}, {1, 0}});
    CHECK(matmul(a, a) == BitMatrix::from_rows({{0, 1}, {1, 1}}));
    CHECK(matmul(BitMatrix::identity(2), a) == a);

    // Column assembly: A times the first basis vector gives [1, 1]^T.
    const BitMatrix e0 = BitMatrix::from_rows({{1}, {0}});
    CHECK(matmul(a, e0) == BitMatrix::from_rows({{1}, {1}}));

    CHECK_THROWS_AS(matmul(a, BitMatrix(3, 2)), DimensionError);
}

TEST_CASE("matvec") {
    const BitMatrix a = BitMatrix::from_rows({{1, 1}, {1, 0}});
    CHECK(matvec(a, BitVector{1, 1}) == BitVector{0, 1});
    CHECK(matvec(a, BitVector{0, 0}) == BitVector{0, 0});
    CHECK(matvec(a, BitVector{0, 1}) == BitVector{1, 0});
    CHECK_THROWS_AS(matvec(a, BitVector{1, 0, 1}), DimensionError);
}

TEST_CASE("matpow") {
    const BitMatrix a = BitMatrix::from_rows({{1, 1}, {1, 0}});
    CHECK(matpow(a, 0) == BitMatrix::identity(2));
    CHECK(matpow(a, 2) == BitMatrix::from_rows({{0, 1}, {1, 1}}));
    CHECK(matpow(a, 3) == BitMatrix::identity(2));
    CHECK_THROWS_AS(matpow(BitMatrix(2, 3), 1), DimensionError);
}

TEST_CASE("rank and determinant") {
    CHECK(rank(BitMatrix::from_rows({{1, 1}, {0, 1}})) == 2);
    CHECK(rank(BitMatrix(3, 3)) == 0);
    CHECK(rank(BitMatrix::from_rows({{1, 1}, {1, 1}})) == 1);

    CHECK(determinant(BitMatrix::from_rows({{1, 1}, {0, 1}})) == 1);
    CHECK(determinant(BitMatrix::from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK_THROWS_AS(determinant(BitMatrix(2, 3)), DimensionError);
}

TEST_CASE("solve") {
    const BitMatrix a = BitMatrix::from_rows({{1, 1}, {0, 1}});
    CHECK(solve(a, BitVector{1, 1}) == BitVector{0, 1});

    const BitVector b{1, 0, 1};
    CHECK(solve(BitMatrix::identity(3), b) == b);

    CHECK_FALSE(solve(BitMatrix::from_rows({{1, 1}, {1, 1}}), BitVector{1, 0}).has_value());
    CHECK_THROWS_AS(solve(a, BitVector{1, 0, 1}), DimensionError);
}

TEST_CASE("algebra laws on random instances") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t p = 1 + rng() % 4;
        const std::size_t q = 1 + rng() % 4;
        const std::size_t r = 1 + rng() % 4;
        const std::size_t s = 1 + rng() % 4;
        const BitMatrix a = ssct::random_matrix(rng, p, q);
        const BitMatrix b = ssct::random_matrix(rng, q, r);
        const BitMatrix c = ssct::random_matrix(rng, r, s);

        // (AB)C == A(BC)
        CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));

        // M ^ M == 0
        CHECK(add(a, a) == BitMatrix(p, q));

        // A(x ^ y) == Ax ^ Ay
        const BitVector x = ssct::random_vector(rng, q);
        const BitVector y = ssct::random_vector(rng, q);
        CHECK(matvec(a, x ^ y) == (matvec(a, x) ^ matvec(a, y)));
    }
}

TEST_CASE("rank bounds and row-swap invariance") {
    std::mt19937 rng(8);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 5;
        const BitMatrix m = ssct::random_matrix(rng, rows, cols);
        const std::size_t rk = rank(m);
        CHECK(rk <= std::min(rows, cols));

        const std::size_t r1 = rng() % rows;
        const std::size_t r2 = rng() % rows;
        BitMatrix swapped = m;
        for (std::size_t c = 0; c < cols; ++c) {
            swapped.set(r1, c, m(r2, c));
            swapped.set(r2, c, m(r1, c));
        }
        CHECK(rank(swapped) == rk);
    }
}

TEST_CASE("solve substitution on random consistent systems") {
    std::mt19937 rng(9);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 5;
        const BitMatrix a = ssct::random_matrix(rng, rows, cols);
        // Build a consistent right-hand side from a random witness.
        const BitVector witness = ssct::random_vector(rng, cols);
        const BitVector b = matvec(a, witness);
        const auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(matvec(a, *x) == b);
    }
}

TEST_CASE("matpow composition") {
    std::mt19937 rng(10);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::size_t n = 1 + rng() % 4;
        const BitMatrix a = ssct::random_matrix(rng, n, n);
        const std::size_t s = rng() % 5;
        const std::size_t t = rng() % 5;
        CHECK(matpow(a, s + t) == matmul(matpow(a, s), matpow(a, t)));
    }
}
