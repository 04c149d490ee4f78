#pragma once

#include "mathon/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Symplectic and orthogonal structure on PG(5,q): polarities, isotropy,
// the opposite relation, perp-system verification, quadric types.

namespace mathon {

struct DegenerateForm : Error {
    using Error::Error;
};
struct NonIntegral : Error {
    using Error::Error;
};

/// Nondegeneracy is recorded at construction time (rank of the Gram).
class AlternatingForm {
  public:
    explicit AlternatingForm(Matrix gram); // requires gram^T = -gram, zero diagonal
    const Matrix& gram() const { return gram_; }
    bool nondegenerate() const { return nondegenerate_; }

    bool operator==(const AlternatingForm&) const = default;

  private:
    Matrix gram_;
    bool nondegenerate_;
};

/// Q(x) = x * sym * x^T; the polar bilinear form has Gram 2*sym
/// (odd characteristic).
class QuadraticForm {
  public:
    explicit QuadraticForm(Matrix sym); // requires sym^T = sym
    const Matrix& sym() const { return sym_; }
    Matrix polar_gram() const { return scale(2, sym_); }
    bool nondegenerate() const { return nondegenerate_; }
    Fp evaluate(const Matrix& row_vector) const;

    bool operator==(const QuadraticForm&) const = default;

  private:
    Matrix sym_;
    bool nondegenerate_;
};

enum class QuadricType { hyperbolic, elliptic, degenerate };

std::string to_string(QuadricType t);

Subspace polar(const Subspace& s, const AlternatingForm& f);
Subspace polar(const Subspace& s, const QuadraticForm& f);

bool is_totally_isotropic(const Subspace& s, const AlternatingForm& f);

/// Lines a, b are opposite iff the pairing matrix basis_a * gram * basis_b^T
/// is invertible; equivalently polar(a) meets b trivially. With a = b this is
/// non-singularity of the line.
bool are_opposite(const Subspace& a, const Subspace& b, const AlternatingForm& f);
bool are_opposite(const Subspace& a, const Subspace& b, const QuadraticForm& f);

/// q^((d-2r-1)/2) * (q^((d+1)/2) + 1) / (q^((d-2r-1)/2) + 1); throws
/// NonIntegral when an exponent or the quotient is not integral.
long long perp_bound(int d, int r, int q);

struct PerpSystemReport {
    int line_count = 0;
    long long bound = 0;
    bool all_nonsingular = false;
    bool pairwise_opposite = false;
    bool pairwise_disjoint = false;
    bool is_partial_perp_system = false;
    bool is_maximal = false;
    struct FailingPair {
        int i, j;
        std::string reason; // "singular" | "not opposite" | "not disjoint"
    };
    std::vector<FailingPair> failing_pairs;
};

PerpSystemReport verify_perp_system(const std::vector<Subspace>& lines, const AlternatingForm& f);
PerpSystemReport verify_perp_system(const std::vector<Subspace>& lines, const QuadraticForm& f);

/// Counts singular projective points of Q; 130 -> hyperbolic, 112 -> elliptic
/// for six variables over GF(3).
std::pair<QuadricType, int> classify_quadric(const QuadraticForm& q, const AmbientSpace& space);

/// The Gram-matrix family making the four seed lines
/// (I O O), (O I O), (O O I), (I I I) a partial perp-system: diagonal blocks
/// s_i * X with X = [[0,1],[2,0]], off-diagonal blocks A, B, C. Checks the
/// characterizing conditions pair by pair and re-verifies the accepted form
/// against verify_perp_system.
struct GramFamilyResult {
    Matrix assembled;                     // the 6x6 candidate Gram
    std::vector<std::string> violations;  // empty iff accepted
    std::optional<AlternatingForm> form;  // set iff accepted
    bool accepted() const { return violations.empty(); }
};

GramFamilyResult seed_gram_family(const Matrix& A, const Matrix& B, const Matrix& C,
                                  std::array<int, 3> signs);

/// The four seed lines of the construction, canonicalized.
std::vector<Subspace> seed_lines();

} // namespace mathon
