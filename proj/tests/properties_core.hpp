#pragma once

#include "fixtures.hpp"
#include "test_support.hpp"

#include "mathon/forms.hpp"
#include "mathon/groups.hpp"
#include "mathon/report.hpp"
#include "mathon/serde.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

// the randomized property suite, shared by the unit tests and the
// acceptance runner; every generator is seeded, so runs are reproducible

namespace mathon::testing {

struct PropertyResult {
    bool pass = true;
    std::string detail;
};

inline void fail(PropertyResult& r, const std::string& msg) {
    r.pass = false;
    if (r.detail.empty()) r.detail = msg;
}

// canonical form is independent of the spanning rows chosen
inline PropertyResult prop_canonicality(int trials = 1000) {
    PropertyResult r;
    SplitMix64 rng{101};
    for (int t = 0; t < trials; ++t) {
        int k = 1 + rng.below(4);
        Matrix rows = random_matrix(rng, k, 6);
        Matrix g = random_invertible(rng, k);
        if (!(Subspace::span_of_rows(g * rows) == Subspace::span_of_rows(rows)))
            fail(r, "row operations changed the canonical form");
    }
    return r;
}

inline PropertyResult prop_dimension_formula(int trials = 1000) {
    PropertyResult r;
    SplitMix64 rng{102};
    for (int t = 0; t < trials; ++t) {
        Subspace a = Subspace::span_of_rows(random_matrix(rng, 1 + rng.below(4), 6));
        Subspace b = Subspace::span_of_rows(random_matrix(rng, 1 + rng.below(4), 6));
        if (span(a, b).vdim() + meet(a, b).vdim() != a.vdim() + b.vdim())
            fail(r, "vdim(span) + vdim(meet) != vdim(a) + vdim(b)");
    }
    return r;
}

inline PropertyResult prop_exact_arithmetic(int trials = 1000) {
    PropertyResult r;
    SplitMix64 rng{103};
    for (int t = 0; t < trials; ++t) {
        Matrix a = random_matrix(rng, 6, 6), b = random_matrix(rng, 6, 6), c = random_matrix(rng, 6, 6);
        if (!((a * b) * c == a * (b * c))) fail(r, "associativity failed");
    }
    return r;
}

inline PropertyResult prop_rank_kernel(int trials = 500) {
    PropertyResult r;
    SplitMix64 rng{104};
    for (int t = 0; t < trials; ++t) {
        Matrix m = random_matrix(rng, 1 + rng.below(6), 1 + rng.below(8));
        auto rr = rref(m);
        if (rank(rr.reduced) != rank(m)) fail(r, "rank changed under rref");
        if (!(rref(rr.reduced).reduced == rr.reduced)) fail(r, "rref not idempotent");
        Matrix ker = kernel_basis(m);
        if (ker.rows() != m.cols() - rank(m)) fail(r, "rank-nullity violated");
        if (ker.rows() > 0 && !(m * ker.transpose()).is_zero()) fail(r, "kernel vectors not annihilated");
        if (ker.rows() > 0 && rank(ker) != ker.rows()) fail(r, "kernel basis not independent");
    }
    for (int t = 0; t < 100; ++t) {
        Matrix m = random_invertible(rng, 6);
        if (!(inverse(m) * m == Matrix::identity(6, 3))) fail(r, "inverse product not identity");
    }
    return r;
}

inline PropertyResult prop_polarity_involution(int trials = 300) {
    PropertyResult r;
    SplitMix64 rng{105};
    std::vector<AlternatingForm> forms{m0(), m15()};
    while (forms.size() < 8) {
        // random nondegenerate alternating form
        Matrix u = random_matrix(rng, 6, 6);
        Matrix skew = u - u.transpose();
        if (rank(skew) == 6) forms.emplace_back(skew);
    }
    for (int t = 0; t < trials; ++t) {
        const AlternatingForm& f = forms[static_cast<size_t>(rng.below(static_cast<int>(forms.size())))];
        Subspace s = Subspace::span_of_rows(random_matrix(rng, 1 + rng.below(5), 6));
        Subspace p = polar(s, f);
        if (s.vdim() + p.vdim() != 6) fail(r, "polar dimension formula violated");
        if (!(polar(p, f) == s)) fail(r, "polarity is not an involution");
    }
    return r;
}

inline PropertyResult prop_opposite_symmetry(int trials = 1000) {
    PropertyResult r;
    SplitMix64 rng{106};
    AlternatingForm f = m15();
    for (int t = 0; t < trials; ++t) {
        Subspace a = Subspace::span_of_rows(random_matrix(rng, 2, 6));
        Subspace b = Subspace::span_of_rows(random_matrix(rng, 2, 6));
        if (a.vdim() != 2 || b.vdim() != 2) continue;
        if (are_opposite(a, b, f) != are_opposite(b, a, f)) fail(r, "opposite is not symmetric");
    }
    return r;
}

inline PropertyResult prop_action_law(int trials = 100) {
    PropertyResult r;
    SplitMix64 rng{107};
    for (int t = 0; t < trials; ++t) {
        Matrix g = random_invertible(rng, 6), h = random_invertible(rng, 6);
        Subspace l = Subspace::span_of_rows(random_matrix(rng, 2, 6));
        if (!(line_action(g * h, l) == line_action(h, line_action(g, l))))
            fail(r, "right action law violated");
        if (!(line_action(Matrix::identity(6, 3), l) == l)) fail(r, "identity does not act trivially");
    }
    return r;
}

inline PropertyResult prop_closure_closed() {
    PropertyResult r;
    auto elements = closure(f5_stabilizer(), 1 << 12);
    std::unordered_set<Matrix, MatrixHash> set(elements.begin(), elements.end());
    for (const Matrix& x : elements)
        for (const Matrix& y : elements)
            if (!set.count(x * y)) {
                fail(r, "closure not closed under products");
                return r;
            }
    for (const Matrix& x : elements)
        if (!set.count(inverse(x))) fail(r, "closure not closed under inverses");
    return r;
}

// the projective block-scalar group permutes the 24 lines transitively with
// trivial stabilizers
inline PropertyResult prop_regular_action() {
    PropertyResult r;
    LineSet L = built0().l_lines;
    auto proj = projective_quotient(closure(block_scalar_group()));
    if (proj.size() != 24) fail(r, "projective block-scalar group is not of order 24");
    const Matrix id = projective_normalize(Matrix::identity(6, 3));
    for (const Matrix& h : proj) {
        if (h == id) continue;
        for (const Subspace& l : L.lines)
            if (line_action(h, l) == l) fail(r, "nontrivial element fixes a line of L");
    }
    LineSet orb{"", orbit(block_scalar_group(), seed_order(L)[0])};
    if (!orb.same_lines_as(L)) fail(r, "the action is not transitive on L");
    return r;
}

inline PropertyResult prop_faithful_s5() {
    PropertyResult r;
    const auto& f5_lines = built0().f5_lines;
    auto proj = projective_quotient(closure(built0().stabilizer, 1 << 12));
    std::set<std::vector<int>> perms;
    const Matrix id = projective_normalize(Matrix::identity(6, 3));
    for (const Matrix& g : proj) {
        std::vector<int> perm;
        for (const Subspace& l : f5_lines.lines) {
            Subspace img = line_action(g, l);
            auto it = std::find(f5_lines.lines.begin(), f5_lines.lines.end(), img);
            if (it == f5_lines.lines.end()) {
                fail(r, "group element does not stabilize the five lines");
                return r;
            }
            perm.push_back(static_cast<int>(it - f5_lines.lines.begin()));
        }
        bool is_id = true;
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) is_id = false;
        if (is_id && !(g == id)) fail(r, "kernel of the permutation action is nontrivial");
        perms.insert(std::move(perm));
    }
    if (perms.size() != 120) fail(r, "permutation image has order " + std::to_string(perms.size()));
    return r;
}

inline PropertyResult prop_five_cycle_fixed_lines() {
    PropertyResult r;
    auto cycles = elements_of_projective_order(closure(built0().stabilizer, 1 << 12), 5);
    if (cycles.size() != 24) fail(r, "expected 24 order-5 elements");
    for (const Matrix& g : cycles)
        if (fixed_lines(g, space53()).size() != 1) fail(r, "an order-5 element does not fix exactly one line");
    return r;
}

inline PropertyResult prop_gram_family_equivalence(int trials = 500) {
    PropertyResult r;
    SplitMix64 rng{108};
    auto lines = seed_lines();
    for (int t = 0; t < trials; ++t) {
        Matrix A = random_matrix(rng, 2, 2), B = random_matrix(rng, 2, 2), C = random_matrix(rng, 2, 2);
        std::array<int, 3> signs{};
        for (auto& s : signs) s = rng.below(2) ? 1 : -1;
        GramFamilyResult res = seed_gram_family(A, B, C, signs);
        bool direct = false;
        try {
            AlternatingForm f(res.assembled);
            direct = f.nondegenerate() && verify_perp_system(lines, f).is_partial_perp_system;
        } catch (const Error&) {
            direct = false;
        }
        if (res.accepted() != direct) fail(r, "family conditions disagree with direct verification");
    }
    return r;
}

inline PropertyResult prop_quadric_counts(int trials = 200) {
    PropertyResult r;
    SplitMix64 rng{109};
    int seen = 0;
    while (seen < trials) {
        Matrix u = random_matrix(rng, 6, 6);
        Matrix sym = u + u.transpose(); // may be any symmetric matrix
        for (int i = 0; i < 6; ++i) sym.set(i, i, rng.below(3));
        if (rank(sym) != 6) continue;
        ++seen;
        auto [type, count] = classify_quadric(QuadraticForm(sym), space53());
        if (type == QuadricType::degenerate || (count != 112 && count != 130))
            fail(r, "nondegenerate quadric with unexpected point count");
    }
    return r;
}

// every seed choice yields the same stage cardinalities
inline PropertyResult prop_equivariance() {
    PropertyResult r;
    for (int seed = 0; seed < 24; ++seed) {
        try {
            MathonResult res = mathon_perp_system(space53(), seed);
            if (res.l_lines.size() != 24 || res.f5_lines.size() != 5 || res.f6_lines.size() != 6 ||
                res.f15_lines.size() != 15 || res.m21.size() != 21 || !res.report.is_maximal)
                fail(r, "stage cardinalities differ at seed " + std::to_string(seed));
        } catch (const Error& e) {
            fail(r, std::string("seed ") + std::to_string(seed) + " failed: " + e.what());
        }
    }
    return r;
}

inline PropertyResult prop_report_determinism() {
    PropertyResult r;
    auto a = report_to_json(run_pipeline(0, 1)).dump();
    auto b = report_to_json(run_pipeline(0, 2)).dump();
    if (a != b) fail(r, "pipeline reports differ between runs");
    auto pa = report_to_json(run_polarity_search(1, 1000, 0, 1)).dump();
    auto pb = report_to_json(run_polarity_search(1, 1000, 0, 1)).dump();
    if (pa != pb) fail(r, "polarity reports differ between runs");
    return r;
}

} // namespace mathon::testing
