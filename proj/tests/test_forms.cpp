#include "test_support.hpp"

#include "mathon/forms.hpp"
#include "mathon/pipeline.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mathon;
using mathon::testing::built0;
using mathon::testing::space53;

TEST_CASE("base Gram and polar subspaces") {
    AlternatingForm f0 = m0();
    CHECK(f0.nondegenerate());
    CHECK(rank(f0.gram()) == 6);

    auto seeds = seed_lines();
    Subspace p1 = polar(seeds[0], f0);
    CHECK(p1 == Subspace::span_of_rows(Matrix::from_rows({{1, 0, 0, 0, 0, 0},
                                                          {0, 1, 0, 0, 0, 0},
                                                          {0, 0, 1, 0, 2, 0},
                                                          {0, 0, 0, 1, 0, 2}},
                                                         3)));
    Subspace p4 = polar(seeds[3], f0);
    CHECK(p4 == Subspace::span_of_rows(Matrix::from_rows({{1, 0, 0, 0, 2, 0},
                                                          {0, 1, 0, 0, 0, 2},
                                                          {0, 0, 1, 0, 2, 0},
                                                          {0, 0, 0, 1, 0, 2}},
                                                         3)));
    Subspace full = Subspace::span_of_rows(Matrix::identity(6, 3));
    CHECK(polar(full, f0).empty());
    CHECK(polar(polar(p1, f0), f0) == p1);
}

TEST_CASE("total isotropy") {
    AlternatingForm f0 = m0();
    for (const Subspace& l : seed_lines()) CHECK(is_totally_isotropic(l, f0));
    // any member of the seed Gram family has +-X diagonal blocks, so the
    // first seed line is anisotropic for it
    Matrix x = Matrix::from_rows({{0, 1}, {2, 0}}, 3);
    GramFamilyResult fam = seed_gram_family(x, x, x, {1, 1, 1});
    AlternatingForm f(fam.assembled);
    CHECK_FALSE(is_totally_isotropic(seed_lines()[0], f));
}

TEST_CASE("opposite lines") {
    auto seeds = seed_lines();
    AlternatingForm f0 = m0();
    CHECK_FALSE(are_opposite(seeds[0], seeds[0], f0)); // isotropic, so singular

    // an accepted family member makes the seed lines pairwise opposite
    GramFamilyResult fam = seed_gram_family(Matrix::from_rows({{0, 1}, {1, 0}}, 3),
                                            Matrix::from_rows({{0, 2}, {1, 0}}, 3),
                                            Matrix::from_rows({{1, 0}, {0, 2}}, 3), {1, 1, 1});
    REQUIRE(fam.accepted());
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            CHECK(are_opposite(seeds[static_cast<size_t>(i)], seeds[static_cast<size_t>(j)], *fam.form));

    AlternatingForm f21(built0().form21.gram());
    const auto& f6v = built0().f6_lines.lines;
    CHECK(are_opposite(f6v[0], f6v[1], f21));
}

TEST_CASE("theoretical bound") {
    CHECK(perp_bound(5, 1, 3) == 21);
    CHECK(perp_bound(5, 1, 2) == 6);
    CHECK(perp_bound(7, 3, 3) == 41);
    CHECK_THROWS_AS(perp_bound(4, 1, 3), NonIntegral);
}

TEST_CASE("perp-system verification") {
    const auto& built = built0();
    PerpSystemReport full = verify_perp_system(built.m21.lines, built.form21);
    CHECK(full.line_count == 21);
    CHECK(full.bound == 21);
    CHECK(full.all_nonsingular);
    CHECK(full.pairwise_opposite);
    CHECK(full.pairwise_disjoint);
    CHECK(full.is_partial_perp_system);
    CHECK(full.is_maximal);
    CHECK(full.failing_pairs.empty());

    PerpSystemReport six = verify_perp_system(built.f6_lines.lines, built.form21);
    CHECK(six.is_partial_perp_system);
    CHECK_FALSE(six.is_maximal);

    PerpSystemReport bad = verify_perp_system(f4().lines, m0());
    CHECK_FALSE(bad.all_nonsingular);
    CHECK_FALSE(bad.is_partial_perp_system);
    CHECK(bad.failing_pairs.size() >= 4);
}

TEST_CASE("quadric classification") {
    // split form x1 x2 + x3 x4 + x5 x6: Gram blocks [[0,2],[2,0]]
    Matrix hyper(6, 6, 3);
    for (int b = 0; b < 3; ++b) {
        hyper.set(2 * b, 2 * b + 1, 2);
        hyper.set(2 * b + 1, 2 * b, 2);
    }
    auto [t1, c1] = classify_quadric(QuadraticForm(hyper), space53());
    CHECK(t1 == QuadricType::hyperbolic);
    CHECK(c1 == 130);
    // oracle: (q^2+1)(q^3-1)/(q-1) for q = 3
    CHECK(c1 == (9 + 1) * (27 - 1) / 2);

    // x1 x2 + x3 x4 + x5^2 + x6^2, anisotropic on the last plane
    Matrix ell(6, 6, 3);
    for (int b = 0; b < 2; ++b) {
        ell.set(2 * b, 2 * b + 1, 2);
        ell.set(2 * b + 1, 2 * b, 2);
    }
    ell.set(4, 4, 1);
    ell.set(5, 5, 1);
    auto [t2, c2] = classify_quadric(QuadraticForm(ell), space53());
    CHECK(t2 == QuadricType::elliptic);
    CHECK(c2 == 112);
    CHECK(c2 == (9 - 1) * (27 + 1) / 2);

    auto [t3, c3] = classify_quadric(QuadraticForm(Matrix(6, 6, 3)), space53());
    CHECK(t3 == QuadricType::degenerate);
    CHECK(c3 == -1);
}

TEST_CASE("seed Gram family") {
    Matrix x = Matrix::from_rows({{0, 1}, {2, 0}}, 3);
    GramFamilyResult zero_sum = seed_gram_family(x, x, x, {1, 1, 1});
    CHECK_FALSE(zero_sum.accepted());
    CHECK(std::find(zero_sum.violations.begin(), zero_sum.violations.end(), "block sum is zero") !=
          zero_sum.violations.end());

    GramFamilyResult singular =
        seed_gram_family(Matrix::from_rows({{1, 1}, {2, 2}}, 3), x, x, {1, 1, 1});
    CHECK_FALSE(singular.accepted());
    CHECK(std::find(singular.violations.begin(), singular.violations.end(), "A not invertible") !=
          singular.violations.end());

    CHECK_THROWS_AS(seed_gram_family(x, x, Matrix::identity(3, 3), {1, 1, 1}), Error);
}
