#pragma once

#include "mathon/forms.hpp"
#include "mathon/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// The construction pipeline: four seed lines -> the 24-line set L ->
// five lines -> six fixed lines -> fifteen induced lines -> the 21-line
// perp-system, plus complement analysis, the syntheme-based inverse
// construction and the elliptic/hyperbolic polarity search.

namespace mathon {

struct UniquenessViolated : Error {
    using Error::Error;
};
struct RecoveryAmbiguous : Error {
    using Error::Error;
};
struct WitnessNotFound : Error {
    using Error::Error;
};
struct NotInL : Error {
    using Error::Error;
};

/// The four seed lines (I O O), (O I O), (O O I), (I I I).
LineSet f4();

/// Block Gram (O X X / X O X / X X O) with X = [[0,1],[2,0]]; nondegenerate,
/// and every seed line is totally isotropic for it.
AlternatingForm m0();

/// The distinguished (R, S) pair used for seed index 0.
Matrix distinguished_r();
Matrix distinguished_s();

/// The eight 2x2 matrices Y over GF(3) with Y - I invertible and Y + I of
/// rank 1, by exhaustive scan of GL(2,3); a single conjugacy class.
std::vector<Matrix> eight_matrices();

/// The 24 ordered pairs (R, S) from the eight-matrix class with rank(R+S)=1.
std::vector<std::pair<Matrix, Matrix>> admissible_rs_pairs();

/// The 24 lines totally isotropic for m0, disjoint from the six solids
/// spanned by seed-line pairs, and meeting each seed line's polar in one
/// point. Built from the (R,S) pairs and independently re-derived by
/// filtering all 11011 lines; the two routes must agree.
LineSet compute_L(const AmbientSpace& space);

/// Seed order of L: index 0 is the distinguished (I R S), the rest follow in
/// lexicographic canonical order.
std::vector<Subspace> seed_order(const LineSet& L);

/// f4 plus the chosen line of L.
LineSet f5(const LineSet& L, int seed_index);
/// Explicit (R,S) variant; throws NotInL when (I R S) is not in L.
LineSet f5_from_pair(const LineSet& L, const Matrix& R, const Matrix& S);

/// The element-wise stabilizer H of the seed lines: block-scalar matrices
/// diag(E,E,E) with E in GL(2,3).
MatrixGroup block_scalar_group();

/// First element h of closure(H) with line_action(h, from) == to.
Matrix mapping_element(const MatrixGroup& h, const Subspace& from, const Subspace& to);

/// Stabilizer of the seed-0 five-line set: the two explicit generators
/// (C block-antidiagonal over C0 = [[2,1],[0,1]], D explicit). For other
/// seeds the generators are conjugated by the H-element moving the
/// distinguished line onto the seed line.
MatrixGroup f5_stabilizer();
MatrixGroup f5_stabilizer(const LineSet& L, int seed_index);

/// Union of the fixed lines of every projective element of order 5 in the
/// stabilizer; exactly six pairwise disjoint lines, in the deterministic
/// order the order-5 elements are found.
LineSet f6(const MatrixGroup& stabilizer, const AmbientSpace& space);

/// The explicit invariant Gram (blocks A=[[2,2],[0,0]], B=[[0,0],[1,1]],
/// C=[[0,0],[1,0]]); validated: rank 6, A+B+C and A R^T + B S^T + R C S^T
/// symmetric for the distinguished R, S.
AlternatingForm m15();
AlternatingForm m15(const LineSet& L, int seed_index);

/// For each of the 15 solids spanned by two of the six lines: the unique
/// line inside it that is opposite to all six and disjoint from the other
/// 14 solids. (i,j)-lexicographic order. Throws UniquenessViolated when a
/// solid yields 0 or >= 2 candidates.
LineSet f15(const LineSet& f6_lines, const AlternatingForm& form);

struct MathonResult {
    LineSet f4_lines, l_lines, f5_lines, f6_lines, f15_lines, m21;
    AlternatingForm form0, form21;
    MatrixGroup stabilizer;
    PerpSystemReport report;
    int seed_index;
};

/// Run every stage and verify the 21-line perp-system.
MathonResult mathon_perp_system(const AmbientSpace& space, int seed_index = 0);

struct ComplementReport {
    int covered_points = 0;    // 84
    int complement_points = 0; // 280
    int solid_count = 0;       // 21
    bool meets_are_lines = false;
    bool three_solids_per_point = false;
    std::vector<Subspace> solids;
};

ComplementReport complement_analysis(const LineSet& m21, const AmbientSpace& space, int jobs = 1);

struct SynthemeRecovery {
    LineSet recovered;        // equals the five-line set
    int syntheme_count = 0;   // 15
    int spread_count = 0;     // 6
    int qualifying_spreads = 0;
    std::vector<std::array<std::pair<int, int>, 3>> spread; // the qualifying one
};

/// Inverse construction: for each syntheme spread on the six line labels,
/// intersect the three solids of each syntheme; exactly one spread yields
/// five lines, and they are the five-line set.
SynthemeRecovery recover_f5(const LineSet& f6_lines);

struct PolarityWitness {
    Matrix sym;
    QuadricType type = QuadricType::degenerate;
    int singular_points = 0;
    std::string provenance;
};

struct PolaritySearchResult {
    PolarityWitness hyperbolic;
    PolarityWitness elliptic;
    long long candidates_tested = 0;
    bool used_random_fallback = false;
};

/// One hyperbolic and one elliptic quadratic form for which the 21 lines are
/// again a perp-system. Deterministic search: the invariant quadratic space
/// of <CD> first, then the semi-invariant spaces of every cyclic subgroup of
/// the stabilizer in closure order, then seeded random symmetric matrices up
/// to the budget. Throws WitnessNotFound when the budget runs out.
PolaritySearchResult find_epsilon_polarities(const LineSet& m21, const MatrixGroup& stabilizer,
                                             const AmbientSpace& space, uint64_t search_seed = 1,
                                             long long random_budget = 100000);

} // namespace mathon
