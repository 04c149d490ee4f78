#include "test_support.hpp"

#include "mathon/gf.hpp"
#include "mathon/pipeline.hpp"

#include <doctest.h>

using namespace mathon;
using mathon::testing::SplitMix64;
using mathon::testing::random_matrix;

namespace {

// independent 2x2 determinant oracle
int det2(const Matrix& m) {
    return ((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) % 3 + 3) % 3;
}

} // namespace

TEST_CASE("field element arithmetic is exact and closed") {
    Fp a(2, 3), b(2, 3);
    CHECK((a + b).value() == 1);
    CHECK((a * b).value() == 1);
    CHECK((-a).value() == 1);
    CHECK(a.inverse().value() == 2);
    CHECK(Fp(7, 5).value() == 2);
    CHECK(Fp(3, 5).inverse().value() == 2);
    CHECK_THROWS_AS(Fp(0, 3).inverse(), SingularMatrix);
    CHECK_THROWS_AS(Fp(1, 4), Error); // not a supported modulus
}

TEST_CASE("rank") {
    CHECK(rank(Matrix::identity(2, 3)) == 2);
    Matrix r = distinguished_r();
    CHECK(rank(r + Matrix::identity(2, 3)) == 1); // [[0,0],[2,0]]
    Matrix x = Matrix::from_rows({{0, 1}, {2, 0}}, 3);
    CHECK(rank(x) == 2);
    CHECK(det2(x) == 1);
    // determinant oracle on random 2x2
    SplitMix64 rng{11};
    for (int t = 0; t < 200; ++t) {
        Matrix m = random_matrix(rng, 2, 2);
        CHECK((rank(m) == 2) == (det2(m) != 0));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Matrix::identity(4, 3)) == Matrix::identity(4, 3));
    Matrix x = Matrix::from_rows({{0, 1}, {2, 0}}, 3);
    Matrix xi = inverse(x);
    CHECK(xi == Matrix::from_rows({{0, 2}, {1, 0}}, 3));
    CHECK(x * xi == Matrix::identity(2, 3));
    CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 1}, {2, 2}}, 3)), SingularMatrix);
}

TEST_CASE("rref") {
    Matrix z(3, 4, 3);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.pivots.empty());

    auto r2 = rref(scale(2, Matrix::identity(3, 3)));
    CHECK(r2.reduced == Matrix::identity(3, 3));
    CHECK(r2.pivots == std::vector<int>{0, 1, 2});

    auto rx = rref(Matrix::from_rows({{0, 1}, {2, 0}}, 3));
    CHECK(rx.reduced == Matrix::identity(2, 3));

    SplitMix64 rng{12};
    for (int t = 0; t < 100; ++t) {
        Matrix m = random_matrix(rng, 1 + rng.below(5), 1 + rng.below(7));
        auto rr = rref(m);
        CHECK(rref(rr.reduced).reduced == rr.reduced);
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Matrix::identity(6, 3)).rows() == 0);
    CHECK(kernel_basis(Matrix::zero(1, 15, 3)).rows() == 15);
    SplitMix64 rng{13};
    for (int t = 0; t < 100; ++t) {
        Matrix m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(8));
        Matrix k = kernel_basis(m);
        CHECK(k.rows() == m.cols() - rank(m));
        if (k.rows() > 0) CHECK((m * k.transpose()).is_zero());
    }
}

TEST_CASE("row eigenspaces") {
    Matrix i6 = Matrix::identity(6, 3);
    CHECK(eigenspace(i6, Fp(1, 3)).rows() == 6);
    CHECK(eigenspace(scale(2, i6), Fp(2, 3)).rows() == 6);

    // the product of the stabilizer generators fixes exactly one line, its
    // row eigenspace at eigenvalue 1
    MatrixGroup g = f5_stabilizer();
    Matrix cd = g.generators[0] * g.generators[1];
    Matrix e1 = eigenspace(cd, Fp(1, 3));
    CHECK(e1.rows() == 2);
    CHECK(Subspace::span_of_rows(e1) ==
          Subspace::span_of_rows(Matrix::from_rows({{1, 0, 1, 2, 2, 0}, {0, 1, 1, 0, 2, 2}}, 3)));
    CHECK(eigenspace(cd, Fp(2, 3)).rows() == 0);
}

TEST_CASE("matrix value semantics and helpers") {
    Matrix a = Matrix::from_rows({{1, 2}, {0, 1}}, 3);
    Matrix b = a;
    b.set(0, 0, 2);
    CHECK(a(0, 0) == 1); // copies are independent
    CHECK(hstack(a, b).cols() == 4);
    CHECK(vstack(a, b).rows() == 4);
    CHECK((a - a).is_zero());
    CHECK(scale(-1, a) == -a);
    CHECK(from_blocks({{a, b}, {b, a}}).rows() == 4);
    CHECK_THROWS_AS(a * Matrix::identity(3, 3), AmbientMismatch);
}
