#include "apx/witness.hpp"

#include <algorithm>

#include "apx/error.hpp"

namespace apx {

RatMatrix evaluation_matrix(const std::vector<Monomial>& fs,
                            const std::vector<RatVector>& ys) {
  RatMatrix out(fs.size(), ys.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      out(i, j) = eval_monomial(fs[i], ys[j]);
  return out;
}

namespace {

bool nonsingular(const std::vector<Monomial>& fs,
                 const std::vector<RatVector>& ys) {
  return fs.size() == ys.size() && determinant(evaluation_matrix(fs, ys)) != 0;
}

std::vector<Monomial> build(const std::vector<RatVector>& ys, std::size_t r,
                            std::size_t m) {
  if (r == 0) return {};
  const std::vector<RatVector> prefix(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(r));

  if (m == 1) {
    std::vector<Monomial> out;
    for (auto c : independent_row_restriction(prefix, r)) {
      out.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(c + 1)});
    }
    return out;
  }
  if (r == 1) return {Monomial({1})};

  const std::vector<RatVector> head(prefix.begin(), prefix.end() - 1);
  const RatVector& last = prefix.back();
  const bool in_span = rank(RatMatrix::from_rows(prefix)) ==
                       rank(RatMatrix::from_rows(head));

  if (!in_span) {
    auto fs = build(ys, r - 1, m);
    // f(last) = sum_j lambda_j f(y_j) has a unique solution.
    RatVector rhs;
    for (const auto& f : fs) rhs.push_back(eval_monomial(f, last));
    const auto lambda = solve(evaluation_matrix(fs, head), rhs);
    if (!lambda) throw InternalError("prefix evaluation matrix is singular");
    for (std::size_t c = 0; c < last.size(); ++c) {
      Rational combo = 0;
      for (std::size_t j = 0; j < head.size(); ++j) combo += (*lambda)[j] * head[j][c];
      if (combo != last[c]) {
        fs.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(c + 1)});
        return fs;
      }
    }
    throw InternalError("vector outside the span agrees with its projection");
  }

  auto fs = build(ys, r - 1, m - 1);
  const std::size_t n = last.size();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::uint32_t c = 1; c <= n; ++c) {
      auto candidate = fs;
      candidate.push_back(fs[i].times(c));
      if (nonsingular(candidate, prefix)) return candidate;
    }
  }
  throw InternalError("no monomial extension breaks the linear relation");
}

}  // namespace

std::vector<Monomial> construct_independent_functions(
    const std::vector<RatVector>& ys, std::size_t m) {
  if (m < 1) throw PreconditionError("degree bound m must be >= 1");
  if (ys.empty()) return {};
  const std::size_t n = ys.front().size();
  for (const auto& y : ys) {
    if (y.size() != n) throw DimensionMismatch("vectors of differing dimension");
    for (const auto& v : y) {
      if (v == 0) throw PreconditionError("precondition failed: zero coordinate");
    }
  }
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j)
      if (ys[i] == ys[j])
        throw PreconditionError("precondition failed: duplicate vectors " +
                                std::to_string(i) + " and " + std::to_string(j));

  // Greedy independent prefix first, then the in-span vectors.
  std::vector<RatVector> ordered;
  std::vector<RatVector> rest;
  std::size_t current = 0;
  for (const auto& y : ys) {
    ordered.push_back(y);
    const std::size_t next = rank(RatMatrix::from_rows(ordered));
    if (next > current) {
      current = next;
    } else {
      ordered.pop_back();
      rest.push_back(y);
    }
  }
  if (current + m - 1 < ys.size()) {
    throw PreconditionError("precondition failed: rank " + std::to_string(current) +
                            " + m - 1 < r = " + std::to_string(ys.size()));
  }
  ordered.insert(ordered.end(), rest.begin(), rest.end());

  auto fs = build(ordered, ordered.size(), m);
  if (!nonsingular(fs, ys)) throw InternalError("constructed witness is singular");
  for (const auto& f : fs) {
    if (f.empty() || f.degree() > m) throw InternalError("witness monomial out of range");
  }
  return fs;
}

}  // namespace apx
