#pragma once

#include "mathon/gf.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <vector>

// The subspace lattice of PG(d,q): canonical representatives, span/meet,
// enumeration, counting.

namespace mathon {

struct TooLarge : Error {
    using Error::Error;
};
/// A verified stage invariant of the construction failed.
struct PipelineInvariantViolated : Error {
    using Error::Error;
};

/// A projective subspace of PG(d,q), held as the unique RREF basis with no
/// zero rows. Two Subspace values are equal exactly when their bases are
/// byte-identical; k = 0 rows encodes the empty subspace.
class Subspace {
  public:
    /// Canonicalize arbitrary spanning rows (zero rows allowed and dropped).
    static Subspace span_of_rows(const Matrix& rows);

    const Matrix& basis() const { return basis_; }
    int ambient_points() const { return basis_.cols(); } // d+1
    int modulus() const { return basis_.modulus(); }
    int vdim() const { return basis_.rows(); }
    int pdim() const { return basis_.rows() - 1; } // -1 = empty
    bool empty() const { return basis_.rows() == 0; }
    bool is_point() const { return vdim() == 1; }
    bool is_line() const { return vdim() == 2; }
    bool is_solid() const { return vdim() == 4; }

    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

  private:
    explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}
    Matrix basis_;
};

Subspace span(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);
bool contains(const Subspace& outer, const Subspace& inner);

/// An ordered, labelled collection of lines (F4, L, F5, F6, F15, M21, F10).
struct LineSet {
    std::string label;
    std::vector<Subspace> lines;

    int size() const { return static_cast<int>(lines.size()); }
    bool contains_line(const Subspace& l) const;
    bool same_lines_as(const LineSet& other) const; // canonical-set equality
};

/// All points (1-dim canonical subspaces) of s; (q^k - 1)/(q - 1) of them.
std::vector<Subspace> points_of(const Subspace& s);
/// All k-dim (vector dimension) subspaces contained in s.
std::vector<Subspace> subspaces_of(const Subspace& s, int k);

/// Number of k-dim vector subspaces of an n-dim space over GF(q).
unsigned long long gaussian_binomial(int n, int k, int q);

/// PG(d,q) with lazily cached point/line/solid enumerations. The cached
/// vectors are sorted lexicographically on basis entries and never change
/// after materialization, so shared const access is thread-safe.
class AmbientSpace {
  public:
    AmbientSpace(int d, int q);

    int d() const { return d_; }
    int q() const { return q_; }
    unsigned long long num_points() const { return gaussian_binomial(d_ + 1, 1, q_); }
    unsigned long long num_lines() const { return gaussian_binomial(d_ + 1, 2, q_); }

    const std::vector<Subspace>& points() const;
    const std::vector<Subspace>& lines() const;
    const std::vector<Subspace>& solids() const;

    /// All k-dim (vector dimension) subspaces in deterministic lexicographic
    /// order. Throws TooLarge when the count exceeds 10^7.
    std::vector<Subspace> enumerate(int k) const;

    /// Index of a point in points(), or -1. Points are encoded base-q.
    int point_index(const Subspace& pt) const;

  private:
    int d_, q_;
    mutable std::mutex mu_;
    mutable std::optional<std::vector<Subspace>> points_, lines_, solids_;
    mutable std::vector<int> point_lookup_;
};

std::vector<Subspace> enumerate_lines(const AmbientSpace& space);

} // namespace mathon
