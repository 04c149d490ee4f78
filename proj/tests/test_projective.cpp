#include "test_support.hpp"

#include "mathon/pipeline.hpp"
#include "mathon/projective.hpp"

#include <doctest.h>

#include <set>

using namespace mathon;
using mathon::testing::SplitMix64;
using mathon::testing::random_invertible;
using mathon::testing::random_matrix;
using mathon::testing::space53;

TEST_CASE("canonical form is representative independent") {
    Matrix i2 = Matrix::identity(2, 3);
    Matrix irs = hstack(hstack(i2, distinguished_r()), distinguished_s());
    CHECK(Subspace::span_of_rows(scale(2, irs)) == Subspace::span_of_rows(irs));

    Matrix swapped = vstack(irs.row(1), irs.row(0));
    CHECK(Subspace::span_of_rows(swapped) == Subspace::span_of_rows(irs));

    // (E, RE, SE) spans the same line as (I, E^-1 R E, E^-1 S E)
    SplitMix64 rng{21};
    for (int t = 0; t < 50; ++t) {
        Matrix e = random_invertible(rng, 2), ei = inverse(e);
        Matrix left = hstack(hstack(e, distinguished_r() * e), distinguished_s() * e);
        Matrix right = hstack(hstack(i2, ei * distinguished_r() * e), ei * distinguished_s() * e);
        CHECK(Subspace::span_of_rows(left) == Subspace::span_of_rows(right));
    }
}

TEST_CASE("span and meet") {
    auto seeds = seed_lines();
    Subspace s12 = span(seeds[0], seeds[1]);
    CHECK(s12.basis() == Matrix::from_rows({{1, 0, 0, 0, 0, 0},
                                            {0, 1, 0, 0, 0, 0},
                                            {0, 0, 1, 0, 0, 0},
                                            {0, 0, 0, 1, 0, 0}},
                                           3));
    CHECK(span(seeds[0], seeds[0]) == seeds[0]);
    Subspace s14 = span(seeds[0], seeds[3]);
    CHECK(s14 == Subspace::span_of_rows(Matrix::from_rows({{1, 0, 0, 0, 0, 0},
                                                           {0, 1, 0, 0, 0, 0},
                                                           {1, 0, 1, 0, 1, 0},
                                                           {0, 1, 0, 1, 0, 1}},
                                                          3)));

    CHECK(meet(seeds[0], seeds[1]).empty());
    CHECK(meet(seeds[0], seeds[0]) == seeds[0]);

    SplitMix64 rng{22};
    for (int t = 0; t < 200; ++t) {
        Subspace a = Subspace::span_of_rows(random_matrix(rng, 1 + rng.below(4), 6));
        Subspace b = Subspace::span_of_rows(random_matrix(rng, 1 + rng.below(4), 6));
        CHECK(span(a, b).vdim() + meet(a, b).vdim() == a.vdim() + b.vdim());
        CHECK(contains(span(a, b), a));
        CHECK(contains(a, meet(a, b)));
    }
}

TEST_CASE("point enumeration inside subspaces") {
    auto seeds = seed_lines();
    CHECK(points_of(seeds[0]).size() == 4);
    CHECK(points_of(span(seeds[0], seeds[1])).size() == 40);
    CHECK(points_of(Subspace::span_of_rows(Matrix(0, 6, 3))).empty());
}

TEST_CASE("line and subspace enumeration") {
    const auto& lines = space53().lines();
    CHECK(lines.size() == 11011);
    CHECK(space53().num_lines() == 11011);
    std::set<Subspace> dedup(lines.begin(), lines.end());
    CHECK(dedup.size() == 11011);
    for (size_t i = 0; i + 1 < lines.size(); i += 997) CHECK(lines[i] < lines[i + 1]);
    // every basis is canonical
    for (size_t i = 0; i < lines.size(); i += 211) {
        CHECK(Subspace::span_of_rows(lines[i].basis()) == lines[i]);
        CHECK(points_of(lines[i]).size() == 4);
    }
    CHECK(space53().points().size() == 364);
    CHECK(space53().solids().size() == 11011);
    for (size_t i = 0; i < space53().solids().size(); i += 1013)
        CHECK(points_of(space53().solids()[i]).size() == 40);

    AmbientSpace pg33(3, 3);
    CHECK(pg33.lines().size() == 130);
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(6, 2, 3) == 11011);
    CHECK(gaussian_binomial(6, 0, 3) == 1);
    CHECK(gaussian_binomial(5, 0, 2) == 1);
    CHECK(gaussian_binomial(6, 4, 3) == 11011); // duality
    CHECK(gaussian_binomial(6, 1, 3) == 364);
    CHECK(gaussian_binomial(4, 2, 3) == 130);

    // oracle: count line spans of point pairs in PG(2,3)
    AmbientSpace pg23(2, 3);
    std::set<Subspace> spans;
    const auto& pts = pg23.points();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) spans.insert(span(pts[i], pts[j]));
    CHECK(spans.size() == gaussian_binomial(3, 2, 3));
}

TEST_CASE("subspaces of a solid") {
    auto seeds = seed_lines();
    Subspace solid = span(seeds[0], seeds[1]);
    auto inner = subspaces_of(solid, 2);
    CHECK(inner.size() == 130);
    for (size_t i = 0; i < inner.size(); i += 17) CHECK(contains(solid, inner[i]));
}

TEST_CASE("oversized enumerations are rejected") {
    AmbientSpace big(9, 5);
    CHECK_THROWS_AS(big.enumerate(5), TooLarge);
}

TEST_CASE("point index lookup") {
    const auto& pts = space53().points();
    for (size_t i = 0; i < pts.size(); i += 29)
        CHECK(space53().point_index(pts[i]) == static_cast<int>(i));
}
