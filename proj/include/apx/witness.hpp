#pragma once

#include <cstddef>
#include <vector>

#include "apx/linalg.hpp"
#include "apx/monomial.hpp"

namespace apx {

/// The r x r matrix [f_i(y_j)].
RatMatrix evaluation_matrix(const std::vector<Monomial>& fs,
                            const std::vector<RatVector>& ys);

/// Builds r non-empty monomials of degree <= m whose evaluation matrix on
/// y_1..y_r is nonsingular.
///
/// Requires the y_j to be distinct, of one dimension, with every coordinate
/// nonzero, and rank{y_j} + m - 1 >= r. Violations throw PreconditionError
/// naming the failed condition.
///
/// Induction on m, then on r. The inputs are first reordered so that a
/// greedy maximal independent prefix comes first; with that order every
/// prefix again satisfies the rank condition. Adding y_{r+1}:
///  - outside span(y_1..y_r): solve f(y_{r+1}) = sum lambda_j f(y_j) for the
///    existing monomials and append x_c for a coordinate c where
///    y_{r+1} differs from sum lambda_j y_j;
///  - inside the span: rebuild the prefix at degree m-1 and append some
///    f_i * x_c that keeps the matrix nonsingular (one always exists).
/// The result is checked before returning.
std::vector<Monomial> construct_independent_functions(
    const std::vector<RatVector>& ys, std::size_t m);

}  // namespace apx
