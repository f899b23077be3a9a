#pragma once

// Incidence of point tuples for the family of maps whose coordinates are
// powers of affine forms of degree <= m. For r+1 <= d+1 points x_0..x_r the
// tuple is incident iff every r x r matrix [f_i(x_j) - f_i(x_0)] over
// monomials f_1..f_r of degree <= m is singular, which holds iff the full
// moment-difference matrix (one row per monomial) has rank < r.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "apx/linalg.hpp"
#include "apx/monomial.hpp"

namespace apx {

/// Ordered points of a common dimension; index 0 is the base point.
using PointTuple = std::vector<RatVector>;

/// r monomials whose r x r matrix [f_i(x_j) - f_i(x_0)] is nonsingular.
struct MonomialWitness {
  std::vector<Monomial> monomials;
};

struct IncidenceVerdict {
  bool incident = false;
  /// Present exactly when not incident.
  std::optional<MonomialWitness> certificate;
};

/// Rows follow enumerate_monomials(N, m); column j-1 holds
/// f(x_j) - f(x_0) for j = 1..r.
RatMatrix moment_difference_matrix(const PointTuple& t, std::size_t m);

/// The r x r matrix [f_i(x_j) - f_i(x_0)] for a candidate witness.
RatMatrix witness_matrix(const PointTuple& t, const MonomialWitness& w);

/// Throws DimensionMismatch if a point does not have dimension spec.N.
IncidenceVerdict is_incident(const PointTuple& t, const FamilySpec& spec);

/// Precomputed moment vectors (values of all non-constant monomials of
/// degree <= m) for a fixed point set, so subsets can be tested without
/// re-evaluating monomials. A subset of size <= d+1 is incident iff its
/// moment vectors are affinely dependent.
class IncidenceTable {
 public:
  IncidenceTable(const std::vector<RatVector>& points, const FamilySpec& spec);

  bool incident(std::span<const std::size_t> subset);
  const FamilySpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return probe_.size(); }

 private:
  FamilySpec spec_;
  AffineRankProbe probe_;
};

/// Every index subset of size <= max_size that is incident while none of its
/// proper subsets is. Sorted lexicographically by index list.
std::vector<std::vector<std::size_t>> minimal_incident_subsets(
    const PointTuple& t, const FamilySpec& spec, std::size_t max_size);

}  // namespace apx
