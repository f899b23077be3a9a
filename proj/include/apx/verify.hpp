#pragma once

// Brute-force oracles over constructed point sets.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apx/construct.hpp"
#include "apx/linalg.hpp"
#include "apx/monomial.hpp"

namespace apx {

struct Violation {
  std::vector<std::size_t> subset;
  DependenceWitness witness;
};

struct VerificationReport {
  std::uint64_t subsets_checked = 0;
  /// Size of the largest subset found dependent (0 if none).
  std::size_t max_dependent_size = 0;
  std::uint64_t violation_count = 0;
  /// First violations in lexicographic subset order (capped).
  std::vector<Violation> violations;
  std::uint64_t lines_checked = 0;
  std::uint64_t subspaces_checked = 0;
  std::chrono::duration<double> elapsed{0};

  bool holds() const noexcept { return violation_count == 0; }
};

/// Checks every k-subset of points in R^d for lying on a common hyperplane
/// (affine rank < d). For k <= d+1 this is affine dependence. At most
/// `max_recorded` violations are kept, each with a dependence witness.
/// Counts and the recorded list do not depend on `workers`.
VerificationReport scan_cohyperplanar(const std::vector<RatVector>& points, std::size_t k,
                                      unsigned workers = 1,
                                      std::size_t max_recorded = 1000);

struct GeneralPositionResult {
  std::size_t size = 0;
  std::vector<std::size_t> subset;
};

/// Largest subset with no d+1 points on a hyperplane, by branch and bound in
/// point-index order (include before exclude, prune when the current size
/// plus the remaining points cannot beat the incumbent). Exponential; meant
/// for a few dozen points.
GeneralPositionResult max_general_position_subset(const std::vector<RatVector>& points);

/// A combinatorial line of [k]^N: pattern[i] is a fixed symbol in 1..k, or 0
/// for a wildcard coordinate.
struct CombinatorialLine {
  std::uint32_t k = 0;
  std::vector<std::uint32_t> pattern;

  std::vector<std::int64_t> point(std::uint32_t symbol) const;
};

/// All (k+1)^N - k^N lines, ordered lexicographically by pattern with the
/// wildcard as 0.
std::vector<CombinatorialLine> enumerate_lines(std::uint32_t k, std::size_t n);

/// A combinatorial subspace of {0,1}^N: a base set plus disjoint non-empty
/// wildcard blocks, ordered by their smallest element.
struct CombinatorialSubspace {
  std::size_t n = 0;
  IndexSet base;
  std::vector<IndexSet> blocks;

  std::size_t dim() const noexcept { return blocks.size(); }
  /// Point with the blocks in `mask` switched on.
  std::vector<std::int64_t> point(std::uint64_t mask) const;
};

/// All subspaces of the given dimension; empty if dim > N.
std::vector<CombinatorialSubspace> enumerate_subspaces(std::size_t n, std::size_t dim);

/// Grid sets: every line image satisfies sum_i (-1)^i C(m+1,i) y_i = 0.
/// Cube sets: every (m+1)-dimensional subspace image satisfies
/// sum_I (-1)^{|I|} y_I = 0. A failed identity is a violation.
VerificationReport verify_structured_images(const ConstructedSet& c);

/// sum over I in [m+1] of (-1)^{|I|} (a_0 + sum_{i in I} a_i)^l, where
/// a = (a_0, ..., a_{m+1}). No restriction on l.
Rational alternating_cube_sum(const std::vector<Rational>& a, std::size_t l);

/// alternating_cube_sum with the contract l <= m (a.size() = m+2), where the
/// sum vanishes. Throws PreconditionError if l > m.
Rational identity_check_cube(const std::vector<Rational>& a, std::size_t l);

/// (-1)^i C(m+1, i) for i = 0..m+1.
std::vector<Rational> finite_difference_coeffs(std::size_t m);

/// `key=value` lines; rationals in witnesses print as p/q.
std::string format_report(const VerificationReport& r, bool with_timing = false);
/// One-record JSON object with the same keys.
std::string report_json(const VerificationReport& r, bool with_timing = false);

}  // namespace apx
