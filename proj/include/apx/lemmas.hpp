#pragma once

// Randomized checks of the algebraic lemmas, shared by the `lemma-check`
// command. Each trial draws an instance from a seeded std::mt19937_64 and
// checks the library's output exactly.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apx/linalg.hpp"
#include "apx/set_incidence.hpp"

namespace apx {

struct LemmaReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::string first_failure;

  bool pass() const noexcept { return passed == trials; }
};

/// cube-identity, line-identity, finite-difference, witness, compression,
/// compression-nonempty, extension, row-removal, affine-invariance.
const std::vector<std::string>& lemma_names();

/// Throws PreconditionError for an unknown name.
LemmaReport run_lemma_check(const std::string& name, std::size_t trials, std::uint64_t seed);

struct WitnessInstance {
  std::vector<RatVector> ys;
  std::size_t m = 1;
};

/// Distinct vectors with nonzero coordinates and rank + m - 1 >= r, with
/// N <= max_n, m <= max_m and r <= min(2m+2, N+m-1).
WitnessInstance random_witness_instance(std::mt19937_64& rng, std::size_t max_n = 5,
                                        std::size_t max_m = 3);

/// r distinct subsets of {1..ground}; excludes the empty set if `nonempty`.
SetFamily random_distinct_family(std::mt19937_64& rng, std::size_t ground, std::size_t r,
                                 bool nonempty);

/// Uniform rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound);

}  // namespace apx
