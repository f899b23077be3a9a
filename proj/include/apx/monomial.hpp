#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apx/linalg.hpp"

namespace apx {

/// Sorted, duplicate-free set of 1-based coordinate indices.
using IndexSet = std::vector<std::uint32_t>;

/// Product of coordinates x_{i} over a multiset of 1-based indices. Any
/// function f: A -> [N] with |A| <= m evaluates as prod_a x_{f(a)}, which only
/// depends on the multiset of values, so the multiset is the canonical form.
class Monomial {
 public:
  Monomial() = default;
  /// Sorts the indices. Throws PreconditionError on a zero index.
  explicit Monomial(std::vector<std::uint32_t> indices);

  const std::vector<std::uint32_t>& indices() const noexcept { return idx_; }
  std::size_t degree() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  bool has_repeats() const noexcept;
  std::uint32_t max_index() const noexcept { return idx_.empty() ? 0 : idx_.back(); }

  /// The set of distinct indices.
  IndexSet support() const;
  /// This monomial with one more factor x_{index}.
  Monomial times(std::uint32_t index) const;
  /// Multiset union.
  Monomial operator*(const Monomial& other) const;

  /// Graded lexicographic: lower degree first, then lexicographic on the
  /// sorted index list.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::uint32_t> idx_;
};

/// Parameters of the family of maps R^N -> R^d whose coordinates are powers
/// (<x,u_i> + c_i)^l, 1 <= l <= m.
struct FamilySpec {
  std::size_t N = 1;
  std::size_t d = 1;
  std::size_t m = 1;

  /// Throws PreconditionError unless N, d, m >= 1.
  void validate() const;
  bool operator==(const FamilySpec&) const = default;
};

/// All monomials of degree <= m in x_1..x_N, graded-lex ordered; there are
/// C(N+m, m) of them.
std::vector<Monomial> enumerate_monomials(std::size_t N, std::size_t m);

/// Empty monomial evaluates to 1. Throws PreconditionError if an index
/// exceeds dim(x).
Rational eval_monomial(const Monomial& f, const RatVector& x);

/// 1 iff support(S) is a subset of X. Intended for set monomials, where this
/// equals eval_monomial at the indicator vector of X.
int eval_monomial_boolean(const Monomial& s, const IndexSet& x);

/// `{1,1,3}`, `{}` for the empty monomial.
std::string to_string(const Monomial& f);
/// Inverse of to_string; whitespace is ignored. Throws PreconditionError.
Monomial parse_monomial(std::string_view text);

std::string to_string(const IndexSet& s);
IndexSet parse_index_set(std::string_view text);

bool is_subset(const IndexSet& small, const IndexSet& big);

}  // namespace apx
