#pragma once

// Exact rational linear algebra. Scalars are GMP rationals (always kept in
// canonical form by gmpxx); elimination is fraction-free over the integers.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace apx {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses `<int>` or `<int>/<posint>`. Throws PreconditionError on bad text.
Rational parse_rational(std::string_view text);
/// `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& value);
std::string to_string(const RatVector& v);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  /// Requires a non-empty list of equal-length vectors unless `height` is
  /// given, in which case an empty list yields a height x 0 matrix.
  static RatMatrix from_columns(const std::vector<RatVector>& cols,
                                std::optional<std::size_t> height = {});
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  RatVector column(std::size_t j) const;

  RatMatrix transposed() const;
  RatMatrix select_rows(std::span<const std::size_t> indices) const;
  RatVector apply(const RatVector& x) const;

  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Row echelon form produced by fraction-free elimination. `pivot_cols[i]` is
/// the pivot column of echelon row i; `row_order[i]` is the input row that
/// ended up there. Rows are scaled by integers, which preserves the row space
/// and right kernel but not individual entries.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> row_order;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Bareiss elimination. Pivot: first nonzero entry, scanning columns left to
/// right and rows top to bottom.
Echelon echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

/// Basis of {v : M v = 0}; one vector per non-pivot column, with a 1 in that
/// column and 0 in the other free columns.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Unique solution of A x = b for square nonsingular A, else nullopt.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Coefficients certifying an affine dependence: not all zero, summing to
/// zero, with the weighted point sum vanishing.
struct DependenceWitness {
  std::vector<Rational> coefficients;
};

/// Checks a witness against a multiset of points.
bool is_valid_witness(const DependenceWitness& w,
                      const std::vector<RatVector>& points);

/// Multiset semantics: duplicate points are dependent. Throws
/// DimensionMismatch if the points do not share one dimension.
std::optional<DependenceWitness> affinely_dependent(
    const std::vector<RatVector>& points);

/// Rank of {p_i - p_0}. Empty input has affine rank 0.
std::size_t affine_rank(const std::vector<RatVector>& points);

/// Given l linearly independent vectors of a common dimension D, returns the
/// lexicographically first set of l coordinates (0-based, ascending) on which
/// the restricted vectors stay independent. Throws PreconditionError if the
/// vectors are dependent or their count differs from l.
std::vector<std::size_t> independent_row_restriction(
    const std::vector<RatVector>& vectors, std::size_t l);

/// Indices of a maximal set of linearly independent rows, chosen greedily
/// in row order.
std::vector<std::size_t> independent_rows(const RatMatrix& m);

/// Affine-rank oracle for repeated queries over subsets of one point set.
/// The points are scaled by a common denominator once (an affine map, so
/// affine ranks are unchanged) and subsets are ranked with in-place integer
/// elimination. Copies share the point data and own their scratch space, so
/// give each worker its own copy.
class AffineRankProbe {
 public:
  explicit AffineRankProbe(const std::vector<RatVector>& points);

  std::size_t size() const noexcept { return count_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Rank of {p_s - p_{subset[0]} : s in subset}.
  std::size_t affine_rank(std::span<const std::size_t> subset);

  /// Subset of at most dim+1 points that is affinely dependent, or any subset
  /// lying on a common hyperplane (affine rank < dim).
  bool cohyperplanar(std::span<const std::size_t> subset) {
    return affine_rank(subset) < dim_;
  }
  bool affinely_independent(std::span<const std::size_t> subset) {
    return affine_rank(subset) + 1 == subset.size();
  }

 private:
  std::size_t count_ = 0;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Integer>> coords_;
  std::vector<Integer> scratch_;
  Integer prev_;
  Integer tmp_;
};

}  // namespace apx
