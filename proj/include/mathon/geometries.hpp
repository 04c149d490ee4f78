#pragma once

#include "mathon/forms.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

// Abstract incidence structures and their verification: generalized
// quadrangle axioms, the duad-syntheme model, isomorphism testing, the
// linear representation of the perp-system, partial-geometry and
// strongly-regular-graph checks.

namespace mathon {

struct NotAGQ : Error {
    using Error::Error;
};
struct NotAPartialGeometry : Error {
    using Error::Error;
};
struct NotSRG : Error {
    using Error::Error;
};

/// Point/line incidence structure. Construction rejects repeated incidence
/// pairs and any two points on more than one common line (partial linear
/// space).
class IncidenceStructure {
  public:
    static IncidenceStructure from_lines(int num_points, std::vector<std::vector<int>> points_per_line);
    static IncidenceStructure from_pairs(int num_points, int num_lines,
                                         const std::vector<std::pair<int, int>>& incidences);

    int num_points() const { return num_points_; }
    int num_lines() const { return static_cast<int>(points_on_line_.size()); }
    const std::vector<int>& points_of_line(int l) const { return points_on_line_[static_cast<size_t>(l)]; }
    const std::vector<int>& lines_of_point(int p) const { return lines_on_point_[static_cast<size_t>(p)]; }
    bool incident(int p, int l) const;

    std::vector<std::string> point_labels, line_labels; // optional

  private:
    IncidenceStructure() = default;
    int num_points_ = 0;
    std::vector<std::vector<int>> points_on_line_;
    std::vector<std::vector<int>> lines_on_point_;
};

// duads and synthemes on six labels, in fixed deterministic order
std::vector<std::pair<int, int>> all_duads();
std::vector<std::array<std::pair<int, int>, 3>> all_synthemes();
/// The six spreads: 5-sets of synthemes partitioning the 15 duads
/// (indices into all_synthemes()).
std::vector<std::array<int, 5>> all_spreads();

/// The ten polars of the solids spanned by two of the five lines.
LineSet f10(const LineSet& f5_lines, const AlternatingForm& form);

/// Points: the fifteen induced lines. Lines: the five lines (type i) and the
/// ten polars (type ii). A type-(i) line is incident with P iff P misses its
/// polar; a type-(ii) line iff P lies inside its polar.
IncidenceStructure build_w2(const LineSet& f15_lines, const LineSet& f5_lines,
                            const LineSet& f10_lines, const AlternatingForm& form);

/// Verifies constant line size s+1, constant point degree t+1, and the
/// one-point antiflag axiom; returns (s, t) or throws NotAGQ.
std::pair<int, int> check_gq(const IncidenceStructure& inc);

/// Duads as points, synthemes as lines, inclusion as incidence.
IncidenceStructure sylvester_model();

struct Isomorphism {
    std::vector<int> point_map; // a-point -> b-point
    std::vector<int> line_map;  // a-line  -> b-line
};

/// Incidence-preserving bijection pair, by backtracking; nullopt when none.
std::optional<Isomorphism> isomorphism(const IncidenceStructure& a, const IncidenceStructure& b);

/// For each point of the W2 instance (an induced line), the pair (i, j) of
/// six-line indices whose span contains it.
std::vector<std::pair<int, int>> f15_duad_labels(const LineSet& f15_lines, const LineSet& f6_lines);

/// True iff the isomorphism onto the duad-syntheme model sends the point
/// labelled (i, j) to the duad {sigma(i), sigma(j)} for a single relabelling
/// sigma of the six indices.
bool duad_consistent(const Isomorphism& iso, const std::vector<std::pair<int, int>>& labels);

/// Coset geometry of the 21 line directions: points are the 729 vectors,
/// lines the 1701 affine translates, 9 points each, 21 lines per point.
IncidenceStructure linear_representation(const LineSet& m21);

struct PGParams {
    int s = 0, t = 0, alpha = 0;
};

/// Verifies the antiflag constant over all antiflags; throws
/// NotAPartialGeometry at the first deviation.
PGParams check_partial_geometry(const IncidenceStructure& inc, int jobs = 1);

struct SRGParams {
    long long v = 0, k = 0, lambda = 0, mu = 0;
};

/// Builds the collinearity graph, verifies regularity and the two common
/// neighbour constants, and checks agreement with the parameter formula
/// ((s+1)(st+a)/a, s(t+1), s-1+t(a-1), a(t+1)).
SRGParams check_srg(const IncidenceStructure& inc, const PGParams& pg, int jobs = 1);

} // namespace mathon
