#pragma once

// Containment matrices I(A;B) with I_ij = 1 iff B_i is a subset of A_j, and
// constructions of small sets S_1..S_r making I(X;S) (nearly) nonsingular.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "apx/incidence.hpp"
#include "apx/linalg.hpp"
#include "apx/monomial.hpp"

namespace apx {

using SetFamily = std::vector<IndexSet>;

struct IncidencePattern {
  RatMatrix matrix;      // |B| x |A|
  SetFamily row_labels;  // B
  SetFamily col_labels;  // A
};

IncidencePattern incidence_matrix(const SetFamily& a, const SetFamily& b);

/// Number of columns minus rank of I(A;B).
std::size_t nullity(const SetFamily& a, const SetFamily& b);

enum class NullityMode {
  ExactZero,  // nullity 0; needs r < 2^{m+1}
  AtMostOne,  // nullity <= 1; needs r < 3 * 2^m
};

/// Largest r admitted by a mode (the bound is r < limit).
std::size_t mode_limit(NullityMode mode, std::size_t m, bool nonempty);

/// For distinct X_1..X_r, returns S_1..S_r with |S_i| <= m and
/// n(X;S) = 0 (ExactZero) or <= 1 (AtMostOne).
///
/// Induction on sum |X_i|: take the smallest element x present, let Y be the
/// distinct sets X_i \ {x} and Z the X_i without x whose union with {x} is
/// also some X_j. Solve Y at degree m and Z at degree m-1, then add x to the
/// Z-side sets. In AtMostOne mode each half is solved in ExactZero mode when
/// its size allows, which keeps the combined kernel at most one-dimensional.
/// Throws PreconditionError if the sets repeat or r is out of bounds.
SetFamily construct_sets(const SetFamily& x, std::size_t m, NullityMode mode);

/// Same for distinct non-empty X_i, returning non-empty S_i. Bounds tighten
/// to r < 2^{m+1} - 1 and r < 3 * 2^m - 1. Solves (empty set, X_1..X_r) and
/// drops one row and the empty-set column.
SetFamily construct_sets_nonempty(const SetFamily& x, std::size_t m,
                                  NullityMode mode);

/// Given distinct X_1..X_r and S_1..S_t with n(X_1..X_t; S_1..S_t) = 0,
/// returns S_{t+1}..S_r of size <= m so that the combined family has
/// nullity <= 1. Needs r < 3 * 2^m; with `nonempty` the X_i must be non-empty,
/// r < 3 * 2^m - 1, and the new sets are non-empty.
SetFamily extend_sets(const SetFamily& x, const SetFamily& prefix, std::size_t m,
                      bool nonempty = false);

/// For an (r+t) x r matrix whose first t rows are independent, returns r row
/// indices (ascending, containing 0..t-1) whose submatrix has the same kernel.
/// Unprotected rows in the span of the other remaining rows are removed
/// greedily in index order.
std::vector<std::size_t> remove_rows_preserving_kernel(const RatMatrix& m,
                                                       std::size_t protected_rows);

/// Reflects {0,1}-points so the base point goes to the origin and returns the
/// supports of the other points (1-based coordinates), in tuple order.
SetFamily tuple_to_setfamily(const PointTuple& t, std::size_t base);

/// Sets as `{1,2}` separated by `;`.
std::string to_string(const SetFamily& family);
SetFamily parse_set_family(std::string_view text);

}  // namespace apx
