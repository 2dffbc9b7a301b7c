#include <gtest/gtest.h>

#include <set>

#include "qcnr/matrix.hpp"

using namespace qcnr;

namespace {

mat random_mat(const gf& f, std::size_t r, std::size_t c, rng& g) {
    mat m(r, c);
    for (auto& v : m.a)
        v = f.random_element(g);
    return m;
}

// independent naive triple-loop product
mat oracle_mul(const gf& f, const mat& x, const mat& y) {
    mat out(x.rows, y.cols);
    for (std::size_t r = 0; r < x.rows; ++r)
        for (std::size_t c = 0; c < y.cols; ++c) {
            fe acc = 0;
            for (std::size_t s = 0; s < x.cols; ++s)
                acc = gf::add(acc, f.mul(x.at(r, s), y.at(s, c)));
            out.at(r, c) = acc;
        }
    return out;
}

// explicit permutation matrix: row i has its 1 at column images[i]
mat perm_matrix(const perm& p) {
    mat m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        m.at(i, p.images[i]) = 1;
    return m;
}

} // namespace

TEST(Circulant, RightShiftLayout) {
    circulant c{3, {1, 2, 3}};
    const mat m = circulant_expand(c);
    EXPECT_EQ(m.column(0), (std::vector<fe>{1, 3, 2}));
    // row 1 = [c2, c0, c1]
    EXPECT_EQ(m.at(1, 0), 3);
    EXPECT_EQ(m.at(1, 1), 1);
    EXPECT_EQ(m.at(1, 2), 2);
}

TEST(Circulant, ZeroAndUnitRows) {
    EXPECT_EQ(circulant_expand({3, {0, 0, 0}}), mat(3, 3));
    EXPECT_EQ(circulant_expand({4, {1, 0, 0, 0}}), mat::identity(4));
}

TEST(Circulant, EveryRowIsRightRotationOfPrevious) {
    gf f(3);
    rng g(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = 3 + 2 * (trial % 3);
        circulant c{p, {}};
        for (std::size_t i = 0; i < p; ++i)
            c.first_row.push_back(f.random_element(g));
        const mat m = circulant_expand(c);
        for (std::size_t r = 1; r < p; ++r)
            for (std::size_t j = 0; j < p; ++j)
                EXPECT_EQ(m.at(r, j), m.at(r - 1, (j + p - 1) % p));
    }
}

TEST(Circulant, PrimeSizeNonConstantRowGivesDistinctColumns) {
    gf f(2);
    rng g(3);
    for (std::size_t p : {3, 5, 7}) {
        for (int trial = 0; trial < 50; ++trial) {
            circulant c{p, {}};
            for (std::size_t i = 0; i < p; ++i)
                c.first_row.push_back(f.random_element(g));
            const bool constant = std::set<fe>(c.first_row.begin(), c.first_row.end()).size() == 1;
            if (constant)
                continue;
            const mat m = circulant_expand(c);
            std::set<std::vector<fe>> cols;
            for (std::size_t j = 0; j < p; ++j)
                cols.insert(m.column(j));
            EXPECT_EQ(cols.size(), p);
        }
    }
}

TEST(MatMul, IdentityAndZero) {
    gf f(2);
    rng g(1);
    const mat a = random_mat(f, 3, 3, g);
    EXPECT_EQ(mat_mul(f, a, mat::identity(3)), a);
    EXPECT_EQ(mat_mul(f, mat(2, 3), a), mat(2, 3));
}

TEST(MatMul, MatchesNaiveOracle) {
    gf f(2);
    rng g(5);
    for (int i = 0; i < 50; ++i) {
        const mat a = random_mat(f, 2, 4, g), b = random_mat(f, 4, 3, g);
        EXPECT_EQ(mat_mul(f, a, b), oracle_mul(f, a, b));
    }
}

TEST(MatMul, DimensionMismatchThrows) {
    gf f(2);
    EXPECT_THROW(mat_mul(f, mat(2, 3), mat(2, 3)), parameter_error);
}

TEST(MatInverse, Identity) {
    gf f(3);
    EXPECT_EQ(mat_inverse(f, mat::identity(4)), mat::identity(4));
}

TEST(MatInverse, SingularFails) {
    gf f(2);
    mat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 1;
    m.at(1, 1) = 2; // repeated row
    EXPECT_FALSE(mat_inverse(f, m).has_value());
}

TEST(MatInverse, MultiplyBackGivesIdentity) {
    gf f(3);
    rng g(17);
    const mat a = random_invertible(f, 5, g);
    const auto inv = mat_inverse(f, a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(mat_mul(f, a, *inv), mat::identity(5));
    EXPECT_EQ(mat_mul(f, *inv, a), mat::identity(5));
}

TEST(GaussSolve, IdentitySystem) {
    gf f(2);
    const std::vector<fe> y{1, 3, 2};
    EXPECT_EQ(gauss_solve(f, mat::identity(3), y), y);
}

TEST(GaussSolve, ZeroRhsGivesZero) {
    gf f(2);
    rng g(2);
    const mat a = random_mat(f, 3, 6, g);
    EXPECT_EQ(gauss_solve(f, a, std::vector<fe>(3, 0)), std::vector<fe>(6, 0));
}

TEST(GaussSolve, SolutionSatisfiesSystem) {
    gf f(2);
    rng g(23);
    for (int i = 0; i < 50; ++i) {
        const mat a = random_mat(f, 4, 9, g);
        std::vector<fe> x(9);
        for (auto& v : x)
            v = f.random_element(g);
        const auto y = mat_vec_mul(f, a, x); // consistent by construction
        const auto z = gauss_solve(f, a, y);
        ASSERT_TRUE(z.has_value());
        EXPECT_EQ(mat_vec_mul(f, a, *z), y);
    }
}

TEST(GaussSolve, InconsistentFails) {
    gf f(2);
    EXPECT_FALSE(gauss_solve(f, mat(2, 3), std::vector<fe>{1, 0}).has_value());
}

TEST(RandomInvertible, OneByOneIsNonzeroScalar) {
    gf f(2);
    rng g(0);
    const mat m = random_invertible(f, 1, g);
    EXPECT_NE(m.at(0, 0), 0);
}

TEST(RandomInvertible, DeterministicPerSeed) {
    gf f(2);
    rng g1(42), g2(42);
    EXPECT_EQ(random_invertible(f, 4, g1), random_invertible(f, 4, g2));
}

TEST(RandomInvertible, PassesInverse) {
    gf f(2);
    rng g(9);
    EXPECT_TRUE(mat_inverse(f, random_invertible(f, 6, g)).has_value());
}

TEST(Perm, IdentityCases) {
    gf f(2);
    rng g(4);
    const mat a = random_mat(f, 4, 8, g);
    EXPECT_EQ(apply_perm_cols(a, perm::identity(8)), a);
    EXPECT_EQ(perm_inverse(perm::identity(5)), perm::identity(5));
}

TEST(Perm, ApplyThenInverseRestores) {
    gf f(2);
    rng g(31);
    const mat a = random_mat(f, 4, 8, g);
    const perm p = random_perm(8, g);
    EXPECT_EQ(apply_perm_cols(apply_perm_cols(a, p), perm_inverse(p)), a);
}

TEST(Perm, MatrixOracleAgreement) {
    // apply_perm_cols and perm_apply must both equal multiplication by the
    // same explicit permutation matrix
    gf f(2);
    rng g(77);
    for (int i = 0; i < 20; ++i) {
        const perm p = random_perm(6, g);
        const mat pm = perm_matrix(p);
        const mat a = random_mat(f, 3, 6, g);
        EXPECT_EQ(apply_perm_cols(a, p), mat_mul(f, a, pm));
        std::vector<fe> x(6);
        for (auto& v : x)
            v = f.random_element(g);
        EXPECT_EQ(perm_apply(p, x), mat_vec_mul(f, pm, x));
    }
}

TEST(Perm, RandomPermIsBijection) {
    rng g(13);
    for (int i = 0; i < 20; ++i)
        EXPECT_TRUE(random_perm(10, g).is_bijection());
}

TEST(Rng, BelowStaysInRange) {
    rng g(5);
    EXPECT_EQ(g.below(1), 0u);
    for (int i = 0; i < 1000; ++i)
        EXPECT_LT(g.below(7), 7u);
}
