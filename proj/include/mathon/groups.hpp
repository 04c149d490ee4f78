#pragma once

#include "mathon/projective.hpp"

#include <vector>

// Matrix-group machinery: closure, projective quotient, relation checks,
// line actions and orbits, fixed lines, invariant-form solvers.

namespace mathon {

struct CapExceeded : Error {
    using Error::Error;
};

struct MatrixGroup {
    std::vector<Matrix> generators; // all invertible, same modulus
};

/// Full element set by breadth-first products, deterministic insertion
/// order (identity first). Throws CapExceeded past cap.
std::vector<Matrix> closure(const MatrixGroup& g, size_t cap = 1u << 20);

/// Scale so the first nonzero entry is 1.
Matrix projective_normalize(const Matrix& m);

/// Normalized elements, first occurrence order.
std::vector<Matrix> projective_quotient(const std::vector<Matrix>& elements);

/// Smallest m >= 1 with g^m scalar.
int projective_order(const Matrix& g);

std::vector<Matrix> elements_of_projective_order(const std::vector<Matrix>& elements, int n);

/// Right action ell -> canonicalize(basis * g); action(g*h) applies g first.
Subspace line_action(const Matrix& g, const Subspace& line);

std::vector<Subspace> orbit(const MatrixGroup& g, const Subspace& seed, size_t cap = 1u << 20);

/// Lines fixed by g, by scanning every canonical line of the space.
std::vector<Subspace> fixed_lines(const Matrix& g, const AmbientSpace& space);

/// The five relations C^2 = D^8 = [C,D^4] = (CD)^5 = [C,D]^3 = identity,
/// each as an exact matrix identity ([a,b] = a^-1 b^-1 a b).
struct RelationReport {
    bool c_squared = false;
    bool d_eighth = false;
    bool c_commutes_d4 = false;
    bool cd_fifth = false;
    bool commutator_cubed = false;
    bool all() const { return c_squared && d_eighth && c_commutes_d4 && cd_fifth && commutator_cubed; }
};

RelationReport check_relations(const Matrix& c, const Matrix& d);

/// Basis of the alternating Gram matrices M with ell * M * ell^T = 0 for
/// every line; dimension 15 - rank of the constraint system.
std::vector<Matrix> forms_vanishing_on_lines(const std::vector<Subspace>& lines, int n = 6, int p = 3);

/// A group stabilizes a polarity when g * M * g^T = lambda_g * M for scalars
/// lambda_g; solutions split by the character (lambda per generator).
struct CharacterSpace {
    std::vector<int> character; // one scalar in [1, p) per generator
    std::vector<Matrix> basis;  // Gram matrices
};

std::vector<CharacterSpace> invariant_alternating_forms(const MatrixGroup& g, int n = 6);
std::vector<CharacterSpace> invariant_quadratic_forms(const MatrixGroup& g, int n = 6);

int total_dimension(const std::vector<CharacterSpace>& spaces);

/// True iff target is a GF(p)-linear combination of the basis Grams.
bool form_in_span(const Matrix& target, const std::vector<Matrix>& basis);

} // namespace mathon
