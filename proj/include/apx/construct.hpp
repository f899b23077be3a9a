#pragma once

// Incidence removal functions and the two point-set constructions.
//
// Maps are stored as polynomial maps R^N -> R^d with every coordinate of
// degree <= m. Such maps are exactly the span of the power-of-affine-form
// family (isolate a coordinate by zeroing the others; powers of affine forms
// span all polynomials of degree <= m), so a generic polynomial map is a
// valid removal-function candidate. Every candidate is verified exhaustively.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apx/incidence.hpp"
#include "apx/linalg.hpp"
#include "apx/monomial.hpp"

namespace apx {

class PolyMap {
 public:
  using Polynomial = std::map<Monomial, Rational>;

  PolyMap() = default;
  /// The zero map R^N -> R^d.
  PolyMap(std::size_t source_dim, std::size_t target_dim);

  std::size_t source_dim() const noexcept { return n_; }
  std::size_t target_dim() const noexcept { return coords_.size(); }
  /// Largest monomial degree with a nonzero coefficient (0 for constants).
  std::size_t degree() const noexcept;

  const Polynomial& coordinate(std::size_t i) const { return coords_.at(i); }
  /// Sets a coefficient; zero removes the term.
  void set(std::size_t coord, const Monomial& f, const Rational& value);

  /// this + lambda * other.
  PolyMap plus_scaled(const PolyMap& other, const Rational& lambda) const;

  bool operator==(const PolyMap&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> coords_;
};

/// Throws DimensionMismatch unless dim(x) = source_dim.
RatVector eval_polymap(const PolyMap& f, const RatVector& x);
std::vector<RatVector> eval_polymap(const PolyMap& f, const std::vector<RatVector>& xs);

/// Every monomial of degree 1..m in every coordinate gets an independent
/// integer coefficient uniform in [-bound, bound] (zeros dropped). With
/// `constant_term` the degree-0 term is drawn as well. Randomness comes from
/// std::mt19937_64 seeded with splitmix64(seed). Throws PreconditionError if
/// bound < 1.
PolyMap random_polymap(const FamilySpec& spec, std::int64_t bound, std::uint64_t seed,
                       bool constant_term = false);

/// splitmix64 finalizer; used to derive per-attempt seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// First subset S of the points (ordered by size, then lexicographically)
/// with 2 <= |S| <= d+1 whose image is affinely dependent although S is not
/// incident. Pairs cover injectivity. Independent of `workers`.
std::optional<std::vector<std::size_t>> find_removal_violation(
    const PolyMap& f, const std::vector<RatVector>& points, const FamilySpec& spec,
    unsigned workers = 1);

struct RemovalOptions {
  std::size_t attempts = 32;
  std::int64_t bound = std::int64_t{1} << 20;
  bool constant_term = false;
  unsigned workers = 1;
};

/// Draws random maps until one is injective on the points and sends every
/// non-incident subset of size <= d+1 to an affinely independent multiset.
/// Throws PreconditionError for repeated points and ConstructionFailed (with
/// the first attempt's violating subset) when attempts run out.
PolyMap incidence_removal_function(const std::vector<RatVector>& points,
                                   const FamilySpec& spec, std::uint64_t seed,
                                   const RemovalOptions& options = {});

struct DeterministicTrace {
  std::size_t non_incident_subsets = 0;
  std::size_t combination_steps = 0;  // times F was replaced by F + lambda g
  std::size_t halvings = 0;
};

/// Iterative construction: walk the non-incident subsets T_1, T_2, ...
/// (largest first, then lexicographic) and keep F with F(T_1..T_i)
/// independent. When F(T_{i+1}) is dependent, take
/// the witness map g of T_{i+1} (its coordinates are the certificate
/// monomials) and try F + lambda g for lambda = 1, 1/2, 1/4, ... until
/// T_1..T_{i+1} are all independent.
PolyMap deterministic_removal_function(const std::vector<RatVector>& points,
                                       const FamilySpec& spec,
                                       DeterministicTrace* trace = nullptr);

enum class ConstructionKind { Grid, Cube };

struct ConstructedSet {
  ConstructionKind kind = ConstructionKind::Grid;
  std::size_t m = 1;
  FamilySpec spec;
  std::uint64_t seed = 0;
  PolyMap map;
  std::vector<RatVector> points;
  /// provenance[i] is the lattice point whose image is points[i].
  std::vector<std::vector<std::int64_t>> provenance;
};

/// All points of {lo..hi}^N, last coordinate varying fastest.
std::vector<std::vector<std::int64_t>> lattice(std::int64_t lo, std::int64_t hi,
                                               std::size_t n);
RatVector to_rational(const std::vector<std::int64_t>& p);

/// Image of [m+2]^N (symbols 1..m+2) under a removal function for the
/// family with target dimension m+1 and degree m.
ConstructedSet grid_construction(std::size_t m, std::size_t n, std::uint64_t seed,
                                 const RemovalOptions& options = {});

/// Image of {0,1}^N in R^d under a removal function of degree m. Requires
/// 2^{m+1} - 1 <= d <= 3 * 2^m - 3.
ConstructedSet cube_construction(std::size_t m, std::size_t d, std::size_t n,
                                 std::uint64_t seed, const RemovalOptions& options = {});

bool cube_band_admits(std::size_t m, std::size_t d);

}  // namespace apx
