#include "apx/incidence.hpp"

#include <algorithm>

#include "apx/combinations.hpp"
#include "apx/error.hpp"

namespace apx {

namespace {

void check_tuple(const PointTuple& t, std::size_t n) {
  if (t.empty()) throw PreconditionError("point tuple is empty");
  for (const auto& p : t) {
    if (p.size() != n) {
      throw DimensionMismatch("point of dimension " + std::to_string(p.size()) +
                              ", expected " + std::to_string(n));
    }
  }
}

}  // namespace

RatMatrix moment_difference_matrix(const PointTuple& t, std::size_t m) {
  if (t.empty()) throw PreconditionError("point tuple is empty");
  check_tuple(t, t.front().size());
  const auto monos = enumerate_monomials(t.front().size(), m);
  RatMatrix out(monos.size(), t.size() - 1);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const Rational base = eval_monomial(monos[i], t[0]);
    for (std::size_t j = 1; j < t.size(); ++j) {
      out(i, j - 1) = eval_monomial(monos[i], t[j]) - base;
    }
  }
  return out;
}

RatMatrix witness_matrix(const PointTuple& t, const MonomialWitness& w) {
  if (t.empty()) throw PreconditionError("point tuple is empty");
  const std::size_t r = t.size() - 1;
  if (w.monomials.size() != r) {
    throw PreconditionError("witness size does not match tuple");
  }
  RatMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const Rational base = eval_monomial(w.monomials[i], t[0]);
    for (std::size_t j = 1; j <= r; ++j) {
      out(i, j - 1) = eval_monomial(w.monomials[i], t[j]) - base;
    }
  }
  return out;
}

IncidenceVerdict is_incident(const PointTuple& t, const FamilySpec& spec) {
  spec.validate();
  check_tuple(t, spec.N);
  if (t.size() >= spec.d + 2) return {true, std::nullopt};

  const std::size_t r = t.size() - 1;
  const RatMatrix moments = moment_difference_matrix(t, spec.m);
  const auto rows = independent_rows(moments);
  if (rows.size() < r) return {true, std::nullopt};

  const auto monos = enumerate_monomials(spec.N, spec.m);
  MonomialWitness w;
  for (auto i : rows) w.monomials.push_back(monos[i]);
  if (determinant(witness_matrix(t, w)) == 0) {
    throw InternalError("monomial witness is singular");
  }
  return {false, std::move(w)};
}

IncidenceTable::IncidenceTable(const std::vector<RatVector>& points,
                               const FamilySpec& spec)
    : spec_(spec), probe_([&] {
        spec.validate();
        check_tuple(points, spec.N);
        auto monos = enumerate_monomials(spec.N, spec.m);
        monos.erase(monos.begin());  // the constant row never contributes
        std::vector<RatVector> moments;
        moments.reserve(points.size());
        for (const auto& p : points) {
          RatVector v;
          v.reserve(monos.size());
          for (const auto& f : monos) v.push_back(eval_monomial(f, p));
          moments.push_back(std::move(v));
        }
        return AffineRankProbe(moments);
      }()) {}

bool IncidenceTable::incident(std::span<const std::size_t> subset) {
  if (subset.size() >= spec_.d + 2) return true;
  if (subset.empty()) return false;
  return probe_.affine_rank(subset) + 1 < subset.size();
}

std::vector<std::vector<std::size_t>> minimal_incident_subsets(
    const PointTuple& t, const FamilySpec& spec, std::size_t max_size) {
  IncidenceTable table(t, spec);
  std::vector<std::vector<std::size_t>> found;
  const std::size_t top = std::min(max_size, t.size());
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::vector<std::size_t>> layer;
    for_each_combination(t.size(), k, [&](const std::vector<std::size_t>& c) {
      // Incidence is monotone, so a non-minimal subset contains a found one.
      const bool covers = std::any_of(found.begin(), found.end(), [&](const auto& s) {
        return std::includes(c.begin(), c.end(), s.begin(), s.end());
      });
      if (!covers && table.incident(c)) layer.push_back(c);
      return true;
    });
    found.insert(found.end(), layer.begin(), layer.end());
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace apx
