#include "mathon/forms.hpp"

namespace mathon {

AlternatingForm::AlternatingForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw Error("Gram matrix must be square");
    if (!(gram_.transpose() == -gram_)) throw Error("Gram matrix is not skew-symmetric");
    for (int i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) != 0) throw Error("alternating Gram has nonzero diagonal");
    nondegenerate_ = rank(gram_) == gram_.rows();
}

QuadraticForm::QuadraticForm(Matrix sym) : sym_(std::move(sym)) {
    if (!sym_.is_square()) throw Error("Gram matrix must be square");
    if (!(sym_.transpose() == sym_)) throw Error("quadratic Gram is not symmetric");
    nondegenerate_ = rank(sym_) == sym_.rows();
}

Fp QuadraticForm::evaluate(const Matrix& x) const {
    Matrix v = x * sym_ * x.transpose();
    return Fp(v(0, 0), sym_.modulus());
}

std::string to_string(QuadricType t) {
    switch (t) {
    case QuadricType::hyperbolic: return "hyperbolic";
    case QuadricType::elliptic: return "elliptic";
    default: return "degenerate";
    }
}

namespace {

Subspace polar_of(const Subspace& s, const Matrix& gram, bool nondegenerate) {
    if (!nondegenerate) throw DegenerateForm("polarity of a degenerate form");
    if (s.ambient_points() != gram.cols()) throw AmbientMismatch("form/subspace dimension mismatch");
    if (s.empty()) {
        Matrix full = Matrix::identity(gram.cols(), gram.modulus());
        return Subspace::span_of_rows(full);
    }
    return Subspace::span_of_rows(kernel_basis(s.basis() * gram));
}

bool pairing_invertible(const Subspace& a, const Subspace& b, const Matrix& gram) {
    Matrix pm = a.basis() * gram * b.basis().transpose();
    return rank(pm) == pm.rows();
}

} // namespace

Subspace polar(const Subspace& s, const AlternatingForm& f) {
    return polar_of(s, f.gram(), f.nondegenerate());
}

Subspace polar(const Subspace& s, const QuadraticForm& f) {
    return polar_of(s, f.polar_gram(), f.nondegenerate());
}

bool is_totally_isotropic(const Subspace& s, const AlternatingForm& f) {
    if (s.empty()) return true;
    return (s.basis() * f.gram() * s.basis().transpose()).is_zero();
}

bool are_opposite(const Subspace& a, const Subspace& b, const AlternatingForm& f) {
    if (!f.nondegenerate()) throw DegenerateForm("opposite test needs a nondegenerate form");
    return pairing_invertible(a, b, f.gram());
}

bool are_opposite(const Subspace& a, const Subspace& b, const QuadraticForm& f) {
    if (!f.nondegenerate()) throw DegenerateForm("opposite test needs a nondegenerate form");
    return pairing_invertible(a, b, f.polar_gram());
}

long long perp_bound(int d, int r, int q) {
    const int e1 = d - 2 * r - 1;
    const int e2 = d + 1;
    if (e1 < 0 || e1 % 2 != 0 || e2 % 2 != 0) throw NonIntegral("perp bound exponent not integral");
    auto qpow = [q](int e) {
        long long v = 1;
        for (int i = 0; i < e; ++i) v *= q;
        return v;
    };
    const long long a = qpow(e1 / 2);
    const long long b = qpow(e2 / 2);
    if ((a * (b + 1)) % (a + 1) != 0) throw NonIntegral("perp bound quotient not integral");
    return a * (b + 1) / (a + 1);
}

namespace {

template <class Form>
PerpSystemReport verify_impl(const std::vector<Subspace>& lines, const Form& f) {
    PerpSystemReport rep;
    rep.line_count = static_cast<int>(lines.size());
    const int n = rep.line_count;
    if (n > 0) {
        const int d = lines[0].ambient_points() - 1;
        rep.bound = perp_bound(d, 1, lines[0].modulus());
    } else {
        rep.bound = perp_bound(5, 1, 3);
    }
    rep.all_nonsingular = rep.pairwise_opposite = rep.pairwise_disjoint = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (!are_opposite(lines[i], lines[j], f)) {
                if (i == j) {
                    rep.all_nonsingular = false;
                    rep.failing_pairs.push_back({i, j, "singular"});
                } else {
                    rep.pairwise_opposite = false;
                    rep.failing_pairs.push_back({i, j, "not opposite"});
                }
            }
            if (i != j && !meet(lines[i], lines[j]).empty()) {
                rep.pairwise_disjoint = false;
                rep.failing_pairs.push_back({i, j, "not disjoint"});
            }
        }
    }
    rep.is_partial_perp_system = rep.all_nonsingular && rep.pairwise_opposite;
    rep.is_maximal = rep.is_partial_perp_system && rep.line_count == rep.bound;
    return rep;
}

} // namespace

PerpSystemReport verify_perp_system(const std::vector<Subspace>& lines, const AlternatingForm& f) {
    return verify_impl(lines, f);
}

PerpSystemReport verify_perp_system(const std::vector<Subspace>& lines, const QuadraticForm& f) {
    return verify_impl(lines, f);
}

std::pair<QuadricType, int> classify_quadric(const QuadraticForm& q, const AmbientSpace& space) {
    if (q.sym().rows() != space.d() + 1) throw AmbientMismatch("form does not match ambient space");
    if (!q.nondegenerate()) return {QuadricType::degenerate, -1};
    int singular = 0;
    for (const Subspace& pt : space.points())
        if (q.evaluate(pt.basis()).value() == 0) ++singular;
    // point counts of the two nondegenerate types in PG(5,3)
    if (singular == 130) return {QuadricType::hyperbolic, singular};
    if (singular == 112) return {QuadricType::elliptic, singular};
    throw Error("unexpected singular point count " + std::to_string(singular));
}

std::vector<Subspace> seed_lines() {
    const int p = 3;
    Matrix I = Matrix::identity(2, p), O = Matrix::zero(2, 2, p);
    std::vector<Subspace> out;
    out.push_back(Subspace::span_of_rows(from_blocks({{I, O, O}})));
    out.push_back(Subspace::span_of_rows(from_blocks({{O, I, O}})));
    out.push_back(Subspace::span_of_rows(from_blocks({{O, O, I}})));
    out.push_back(Subspace::span_of_rows(from_blocks({{I, I, I}})));
    return out;
}

GramFamilyResult seed_gram_family(const Matrix& A, const Matrix& B, const Matrix& C,
                                  std::array<int, 3> signs) {
    const int p = 3;
    if (A.rows() != 2 || A.cols() != 2 || B.rows() != 2 || B.cols() != 2 || C.rows() != 2 ||
        C.cols() != 2)
        throw Error("blocks must be 2x2");
    for (int s : signs)
        if (s != 1 && s != -1) throw Error("signs must be +-1");

    GramFamilyResult res;
    const Matrix X = Matrix::from_rows({{0, 1}, {2, 0}}, p);
    Matrix d0 = scale(signs[0], X), d1 = scale(signs[1], X), d2 = scale(signs[2], X);
    res.assembled = from_blocks({{d0, A, B},
                                 {-A.transpose(), d1, C},
                                 {-B.transpose(), -C.transpose(), d2}});

    auto invertible = [](const Matrix& m) { return rank(m) == m.rows(); };

    // pairwise opposition of the first three seed lines
    if (!invertible(A)) res.violations.push_back("A not invertible");
    if (!invertible(B)) res.violations.push_back("B not invertible");
    if (!invertible(C)) res.violations.push_back("C not invertible");
    // fourth line self-opposite: the sum of all blocks must be nonzero
    Matrix blocksum(2, 2, p);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            blocksum.set(i % 2, j % 2, blocksum(i % 2, j % 2) + res.assembled(i, j));
    if (blocksum.is_zero()) res.violations.push_back("block sum is zero");
    // each of the first three lines against the fourth: the actual pairings
    if (!invertible(d0 + A + B)) res.violations.push_back("pairing of line 1 with line 4 singular");
    if (!invertible(-A.transpose() + d1 + C))
        res.violations.push_back("pairing of line 2 with line 4 singular");
    if (!invertible(-B.transpose() - C.transpose() + d2))
        res.violations.push_back("pairing of line 3 with line 4 singular");
    if (rank(res.assembled) != 6) res.violations.push_back("assembled Gram is degenerate");

    if (res.violations.empty()) {
        AlternatingForm f(res.assembled);
        PerpSystemReport check = verify_perp_system(seed_lines(), f);
        if (!check.is_partial_perp_system)
            throw Error("gram family conditions accepted a non-perp-system form");
        res.form = std::move(f);
    }
    return res;
}

} // namespace mathon
