#include "apx/construct.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "apx/combinations.hpp"
#include "apx/error.hpp"

namespace apx {

PolyMap::PolyMap(std::size_t source_dim, std::size_t target_dim)
    : n_(source_dim), coords_(target_dim) {}

std::size_t PolyMap::degree() const noexcept {
  std::size_t deg = 0;
  for (const auto& p : coords_)
    for (const auto& [f, c] : p) deg = std::max(deg, f.degree());
  return deg;
}

void PolyMap::set(std::size_t coord, const Monomial& f, const Rational& value) {
  if (coord >= coords_.size()) throw DimensionMismatch("coordinate out of range");
  if (f.max_index() > n_) throw DimensionMismatch("monomial index exceeds source dimension");
  if (value == 0) {
    coords_[coord].erase(f);
  } else {
    coords_[coord][f] = value;
  }
}

PolyMap PolyMap::plus_scaled(const PolyMap& other, const Rational& lambda) const {
  if (other.n_ != n_ || other.coords_.size() != coords_.size()) {
    throw DimensionMismatch("maps of different shape");
  }
  PolyMap out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    for (const auto& [f, c] : other.coords_[i]) {
      auto it = out.coords_[i].find(f);
      const Rational value = (it == out.coords_[i].end() ? Rational(0) : it->second) + lambda * c;
      out.set(i, f, value);
    }
  }
  return out;
}

RatVector eval_polymap(const PolyMap& f, const RatVector& x) {
  if (x.size() != f.source_dim()) {
    throw DimensionMismatch("point of dimension " + std::to_string(x.size()) +
                            ", map expects " + std::to_string(f.source_dim()));
  }
  RatVector y(f.target_dim());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Rational acc = 0;
    for (const auto& [mono, c] : f.coordinate(i)) acc += c * eval_monomial(mono, x);
    y[i] = acc;
  }
  return y;
}

std::vector<RatVector> eval_polymap(const PolyMap& f, const std::vector<RatVector>& xs) {
  std::vector<RatVector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(eval_polymap(f, x));
  return out;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

PolyMap random_polymap(const FamilySpec& spec, std::int64_t bound, std::uint64_t seed,
                       bool constant_term) {
  spec.validate();
  if (bound < 1) throw PreconditionError("coefficient bound must be >= 1");
  std::mt19937_64 rng(mix_seed(seed));
  std::uniform_int_distribution<std::int64_t> coeff(-bound, bound);
  const auto monos = enumerate_monomials(spec.N, spec.m);
  PolyMap f(spec.N, spec.d);
  for (std::size_t i = 0; i < spec.d; ++i) {
    for (const auto& mono : monos) {
      if (mono.empty() && !constant_term) continue;
      const std::int64_t c = coeff(rng);
      f.set(i, mono, Rational(static_cast<long>(c)));
    }
  }
  return f;
}

namespace {

void check_points(const std::vector<RatVector>& points, const FamilySpec& spec) {
  for (const auto& p : points) {
    if (p.size() != spec.N) throw DimensionMismatch("point dimension differs from N");
  }
}

void require_distinct(const std::vector<RatVector>& points) {
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("points are not distinct");
  }
}

struct FoundSubset {
  bool found = false;
  std::vector<std::size_t> subset;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_removal_violation(
    const PolyMap& f, const std::vector<RatVector>& points, const FamilySpec& spec,
    unsigned workers) {
  spec.validate();
  check_points(points, spec);
  if (f.source_dim() != spec.N || f.target_dim() != spec.d) {
    throw DimensionMismatch("map shape differs from family parameters");
  }
  workers = std::max(1u, workers);
  const std::size_t n = points.size();
  const AffineRankProbe image_probe(eval_polymap(f, points));
  const IncidenceTable table(points, spec);
  std::vector<AffineRankProbe> images(workers, image_probe);
  std::vector<IncidenceTable> tables(workers, table);

  for (std::size_t k = 2; k <= std::min(spec.d + 1, n); ++k) {
    std::atomic<std::size_t> best{n};
    auto results = run_ordered<FoundSubset>(
        n, workers,
        [&](std::size_t first, unsigned w) {
          FoundSubset out;
          for_each_with_first(n, k, first, [&](const std::vector<std::size_t>& c) {
            if (!images[w].affinely_independent(c) && !tables[w].incident(c)) {
              out.found = true;
              out.subset = c;
              return false;
            }
            return true;
          });
          if (out.found) {
            std::size_t cur = best.load();
            while (first < cur && !best.compare_exchange_weak(cur, first)) {
            }
          }
          return out;
        },
        [&](std::size_t first) { return first > best.load(); });
    for (auto& r : results)
      if (r.found) return std::move(r.subset);
  }
  return std::nullopt;
}

PolyMap incidence_removal_function(const std::vector<RatVector>& points,
                                   const FamilySpec& spec, std::uint64_t seed,
                                   const RemovalOptions& options) {
  spec.validate();
  check_points(points, spec);
  require_distinct(points);
  if (options.attempts == 0) throw PreconditionError("attempts must be >= 1");
  std::vector<std::size_t> first_violation;
  for (std::size_t a = 0; a < options.attempts; ++a) {
    PolyMap f = random_polymap(spec, options.bound, seed + a, options.constant_term);
    auto bad = find_removal_violation(f, points, spec, options.workers);
    if (!bad) return f;
    if (a == 0) first_violation = *bad;
  }
  throw ConstructionFailed("no removal function found in " +
                               std::to_string(options.attempts) + " attempts",
                           std::move(first_violation));
}

PolyMap deterministic_removal_function(const std::vector<RatVector>& points,
                                       const FamilySpec& spec,
                                       DeterministicTrace* trace) {
  spec.validate();
  check_points(points, spec);
  require_distinct(points);
  constexpr std::size_t kMaxHalvings = 512;
  DeterministicTrace local;
  const std::size_t n = points.size();

  IncidenceTable table(points, spec);
  std::vector<std::vector<std::size_t>> pending;
  // Largest subsets first: once a set has an independent image, so do all of
  // its subsets, and they pass without a combination step.
  for (std::size_t k = std::min(spec.d + 1, n); k >= 2; --k) {
    for_each_combination(n, k, [&](const std::vector<std::size_t>& c) {
      if (!table.incident(c)) pending.push_back(c);
      return true;
    });
  }
  local.non_incident_subsets = pending.size();

  PolyMap current(spec.N, spec.d);
  std::vector<std::vector<std::size_t>> fixed;
  auto all_independent = [&](const PolyMap& f, const std::vector<std::size_t>& extra) {
    AffineRankProbe probe(eval_polymap(f, points));
    if (!probe.affinely_independent(extra)) return false;
    return std::all_of(fixed.begin(), fixed.end(),
                       [&](const auto& s) { return probe.affinely_independent(s); });
  };

  for (const auto& subset : pending) {
    {
      AffineRankProbe probe(eval_polymap(current, points));
      if (probe.affinely_independent(subset)) {
        fixed.push_back(subset);
        continue;
      }
    }
    PointTuple tuple;
    for (auto i : subset) tuple.push_back(points[i]);
    const auto verdict = is_incident(tuple, spec);
    if (verdict.incident) throw InternalError("subset changed incidence verdict");
    PolyMap g(spec.N, spec.d);
    const auto& monos = verdict.certificate->monomials;
    for (std::size_t i = 0; i < monos.size(); ++i) g.set(i, monos[i], 1);

    Rational lambda = 1;
    bool accepted = false;
    for (std::size_t h = 0; h <= kMaxHalvings; ++h) {
      PolyMap candidate = current.plus_scaled(g, lambda);
      if (all_independent(candidate, subset)) {
        current = std::move(candidate);
        accepted = true;
        break;
      }
      lambda /= 2;
      ++local.halvings;
    }
    if (!accepted) throw InternalError("halving search exceeded its cap");
    ++local.combination_steps;
    fixed.push_back(subset);
  }

  if (auto bad = find_removal_violation(current, points, spec)) {
    throw InternalError("deterministic removal function failed verification");
  }
  if (trace) *trace = local;
  return current;
}

std::vector<std::vector<std::int64_t>> lattice(std::int64_t lo, std::int64_t hi,
                                               std::size_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(n, lo);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == hi) --i;
    if (i == 0) break;
    ++cur[i - 1];
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), lo);
  }
  return out;
}

RatVector to_rational(const std::vector<std::int64_t>& p) {
  RatVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

namespace {

constexpr std::size_t kMaxSourcePoints = 1 << 12;

ConstructedSet build(ConstructionKind kind, std::size_t m, const FamilySpec& spec,
                     std::vector<std::vector<std::int64_t>> source, std::uint64_t seed,
                     const RemovalOptions& options) {
  std::vector<RatVector> xs;
  xs.reserve(source.size());
  for (const auto& p : source) xs.push_back(to_rational(p));
  ConstructedSet out;
  out.kind = kind;
  out.m = m;
  out.spec = spec;
  out.seed = seed;
  out.map = incidence_removal_function(xs, spec, seed, options);
  out.points = eval_polymap(out.map, xs);
  out.provenance = std::move(source);
  return out;
}

void check_budget(std::size_t base, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= base;
    if (total > kMaxSourcePoints) {
      throw PreconditionError("source lattice exceeds " + std::to_string(kMaxSourcePoints) +
                              " points");
    }
  }
}

}  // namespace

ConstructedSet grid_construction(std::size_t m, std::size_t n, std::uint64_t seed,
                                 const RemovalOptions& options) {
  if (m < 1 || n < 1) throw PreconditionError("m and N must be >= 1");
  check_budget(m + 2, n);
  const FamilySpec spec{n, m + 1, m};
  return build(ConstructionKind::Grid, m, spec,
               lattice(1, static_cast<std::int64_t>(m + 2), n), seed, options);
}

bool cube_band_admits(std::size_t m, std::size_t d) {
  if (m < 1 || m > 30) return false;
  const std::size_t p = std::size_t{1} << m;
  return 2 * p - 1 <= d && d + 3 <= 3 * p;
}

ConstructedSet cube_construction(std::size_t m, std::size_t d, std::size_t n,
                                 std::uint64_t seed, const RemovalOptions& options) {
  if (m < 1 || n < 1) throw PreconditionError("m and N must be >= 1");
  if (!cube_band_admits(m, d)) {
    throw PreconditionError("d = " + std::to_string(d) + " outside 2^(m+1)-1 <= d <= 3*2^m-3 for m = " +
                            std::to_string(m));
  }
  check_budget(2, n);
  const FamilySpec spec{n, d, m};
  return build(ConstructionKind::Cube, m, spec, lattice(0, 1, n), seed, options);
}

}  // namespace apx
