#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nakalg/bruhat.hpp"

using namespace nakalg;

TEST_CASE("exact matrix arithmetic") {
    const ExactMatrix a = ExactMatrix::from_int_rows({{2, 1}, {1, 1}});
    CHECK(determinant(a) == 1);
    const ExactMatrix inv = inverse_exact(a);
    CHECK(inv * a == ExactMatrix::identity(2));
    CHECK(a.transpose()(0, 1) == 1);
    CHECK(rank_exact(ExactMatrix::from_int_rows({{1, 2}, {2, 4}})) == 1);

    const ExactMatrix sing = ExactMatrix::from_int_rows({{1, 2}, {2, 4}});
    CHECK(determinant(sing) == 0);
    CHECK_THROWS(inverse_exact(sing));
}

TEST_CASE("bruhat factorization of a fixed matrix") {
    // Coxeter matrix of the five-simple chain algebra with Kupisch 4,4,3,2,1
    const ExactMatrix c = ExactMatrix::from_int_rows({{0, 0, 0, -1, 0},
                                                      {0, 0, 0, 0, -1},
                                                      {-1, 1, 0, 0, -1},
                                                      {-1, 0, 1, 0, -1},
                                                      {-1, 0, 0, 1, -1}});
    CHECK(bruhat_column_permutation(c) == Permutation({5, 3, 4, 1, 2}));
    const BruhatFactors f = bruhat_factorize(c);
    CHECK(f.u1 * permutation_matrix(f.p) * f.u2 == c);
    CHECK(f.u1.is_upper_triangular_nonzero_diag());
    CHECK(f.u2.is_upper_triangular_nonzero_diag());
    CHECK(f.p.inverse() == bruhat_column_permutation(c));
}

TEST_CASE("permutation-times-upper detection") {
    CHECK(*is_permutation_times_upper(ExactMatrix::identity(3)) == Permutation::identity(3));
    const Permutation p({3, 1, 2});
    CHECK(*is_permutation_times_upper(permutation_matrix(p)) == p);
    // the fixed Coxeter matrix above has a nontrivial U1, so no PU form
    const ExactMatrix c = ExactMatrix::from_int_rows({{0, 0, 0, -1, 0},
                                                      {0, 0, 0, 0, -1},
                                                      {-1, 1, 0, 0, -1},
                                                      {-1, 0, 1, 0, -1},
                                                      {-1, 0, 0, 1, -1}});
    CHECK_FALSE(is_permutation_times_upper(c).has_value());
}

namespace {

ExactMatrix random_unimodular(std::mt19937& rng, int n) {
    ExactMatrix m = ExactMatrix::identity(n);
    std::uniform_int_distribution<int> row(0, n - 1), coef(-3, 3), kind(0, 3);
    for (int step = 0; step < 3 * n; ++step) {
        const int i = row(rng), j = row(rng);
        if (i == j) continue;
        if (kind(rng) == 0) {
            for (int k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
        } else {
            const int c = coef(rng);
            for (int k = 0; k < n; ++k) m(i, k) += Rat(c) * m(j, k);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("bruhat properties on random unimodular matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        const ExactMatrix m = random_unimodular(rng, n);
        const Rat det = determinant(m);
        REQUIRE((det == 1 || det == -1));
        const BruhatFactors f = bruhat_factorize(m);
        REQUIRE(f.u1 * permutation_matrix(f.p) * f.u2 == m);
        const Permutation pc = bruhat_column_permutation(m);
        const Permutation pr = bruhat_row_permutation(m);
        REQUIRE(pc == pr.inverse());
        REQUIRE(f.p.inverse() == pc);
        const auto pu = is_permutation_times_upper(m);
        // PU form exists exactly when the factorization works with U1 = Id,
        // i.e. P^{-1} M is upper triangular with nonzero diagonal; the
        // leading-entry map of a PU matrix is the inverse of the column
        // permutation
        const ExactMatrix candidate = permutation_matrix(pc) * m;
        REQUIRE(pu.has_value() == candidate.is_upper_triangular_nonzero_diag());
        if (pu) REQUIRE(*pu == pc.inverse());
    }
}
