#include "apx/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "apx/combinations.hpp"
#include "apx/error.hpp"

namespace apx {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t common_dim(const std::vector<RatVector>& points) {
  if (points.empty()) return 0;
  for (const auto& p : points)
    if (p.size() != points.front().size())
      throw DimensionMismatch("points of differing dimension");
  return points.front().size();
}

std::vector<RatVector> pick(const std::vector<RatVector>& points,
                            const std::vector<std::size_t>& subset) {
  std::vector<RatVector> out;
  out.reserve(subset.size());
  for (auto i : subset) out.push_back(points[i]);
  return out;
}

struct ScanChunk {
  std::uint64_t checked = 0;
  std::uint64_t bad = 0;
  std::vector<std::vector<std::size_t>> recorded;
};

}  // namespace

VerificationReport scan_cohyperplanar(const std::vector<RatVector>& points, std::size_t k,
                                      unsigned workers, std::size_t max_recorded) {
  const auto start = Clock::now();
  const std::size_t d = common_dim(points);
  const std::size_t n = points.size();
  workers = std::max(1u, workers);
  VerificationReport report;
  if (k == 0 || k > n) {
    report.elapsed = Clock::now() - start;
    return report;
  }
  // Up to d+1 points the subset must be affinely independent; beyond that it
  // must not lie on a hyperplane.
  const std::size_t threshold = std::min(k - 1, d);
  const AffineRankProbe probe(points);
  std::vector<AffineRankProbe> probes(workers, probe);
  auto chunks = run_ordered<ScanChunk>(n - k + 1, workers, [&](std::size_t first, unsigned w) {
    ScanChunk chunk;
    for_each_with_first(n, k, first, [&](const std::vector<std::size_t>& c) {
      ++chunk.checked;
      if (probes[w].affine_rank(c) < threshold) {
        ++chunk.bad;
        if (chunk.recorded.size() < max_recorded) chunk.recorded.push_back(c);
      }
      return true;
    });
    return chunk;
  });
  for (auto& chunk : chunks) {
    report.subsets_checked += chunk.checked;
    report.violation_count += chunk.bad;
    for (auto& s : chunk.recorded) {
      if (report.violations.size() >= max_recorded) break;
      auto w = affinely_dependent(pick(points, s));
      if (!w) throw InternalError("cohyperplanar subset without dependence witness");
      report.violations.push_back({std::move(s), std::move(*w)});
    }
  }
  if (report.violation_count > 0) report.max_dependent_size = k;
  report.elapsed = Clock::now() - start;
  return report;
}

GeneralPositionResult max_general_position_subset(const std::vector<RatVector>& points) {
  const std::size_t d = common_dim(points);
  const std::size_t n = points.size();
  AffineRankProbe probe(points);
  GeneralPositionResult best;
  std::vector<std::size_t> current;
  std::vector<std::size_t> trial;

  auto compatible = [&](std::size_t p) {
    if (current.size() < d) return true;
    bool ok = true;
    for_each_combination(current.size(), d, [&](const std::vector<std::size_t>& c) {
      trial.clear();
      for (auto i : c) trial.push_back(current[i]);
      trial.push_back(p);
      if (!probe.affinely_independent(trial)) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  };

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (current.size() + (n - i) <= best.size) return;
    if (i == n) {
      best.size = current.size();
      best.subset = current;
      return;
    }
    if (compatible(i)) {
      current.push_back(i);
      search(i + 1);
      current.pop_back();
    }
    search(i + 1);
  };
  search(0);
  return best;
}

std::vector<std::int64_t> CombinatorialLine::point(std::uint32_t symbol) const {
  std::vector<std::int64_t> p(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) p[i] = pattern[i] == 0 ? symbol : pattern[i];
  return p;
}

std::vector<CombinatorialLine> enumerate_lines(std::uint32_t k, std::size_t n) {
  if (k < 2) throw PreconditionError("alphabet size must be >= 2");
  std::vector<CombinatorialLine> out;
  std::vector<std::uint32_t> cur(n, 0);
  while (true) {
    if (std::find(cur.begin(), cur.end(), 0u) != cur.end()) out.push_back({k, cur});
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == k) --i;
    if (i == 0) break;
    ++cur[i - 1];
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), 0u);
  }
  return out;
}

std::vector<std::int64_t> CombinatorialSubspace::point(std::uint64_t mask) const {
  std::vector<std::int64_t> p(n, 0);
  for (auto e : base) p[e - 1] = 1;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (mask >> b & 1u)
      for (auto e : blocks[b]) p[e - 1] = 1;
  return p;
}

std::vector<CombinatorialSubspace> enumerate_subspaces(std::size_t n, std::size_t dim) {
  std::vector<CombinatorialSubspace> out;
  if (dim > n || dim > 63) return out;
  // Label per coordinate: 0 outside, 1 in the base, 2+b in block b. Blocks
  // must be non-empty and first appear in increasing order.
  const std::size_t labels = dim + 2;
  std::vector<std::size_t> cur(n, 0);
  while (true) {
    std::size_t next_block = 0;
    bool canonical = true;
    for (auto l : cur) {
      if (l < 2) continue;
      if (l - 2 > next_block) {
        canonical = false;
        break;
      }
      if (l - 2 == next_block) ++next_block;
    }
    if (canonical && next_block == dim) {
      CombinatorialSubspace s;
      s.n = n;
      s.blocks.resize(dim);
      for (std::size_t i = 0; i < n; ++i) {
        const auto e = static_cast<std::uint32_t>(i + 1);
        if (cur[i] == 1) s.base.push_back(e);
        if (cur[i] >= 2) s.blocks[cur[i] - 2].push_back(e);
      }
      out.push_back(std::move(s));
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == labels - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i), cur.end(), 0u);
  }
  return out;
}

std::vector<Rational> finite_difference_coeffs(std::size_t m) {
  std::vector<Rational> out;
  Integer c = 1;
  for (std::size_t i = 0; i <= m + 1; ++i) {
    out.emplace_back(i % 2 == 0 ? c : Integer(-c));
    c = c * static_cast<unsigned long>(m + 1 - i) / static_cast<unsigned long>(i + 1);
  }
  return out;
}

Rational alternating_cube_sum(const std::vector<Rational>& a, std::size_t l) {
  if (a.size() < 2) throw PreconditionError("need a_0 and at least one a_i");
  const std::size_t terms = a.size() - 1;
  if (terms > 30) throw PreconditionError("too many summands");
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << terms); ++mask) {
    Rational base = a[0];
    for (std::size_t i = 0; i < terms; ++i)
      if (mask >> i & 1u) base += a[i + 1];
    Rational power = 1;
    for (std::size_t e = 0; e < l; ++e) power *= base;
    if (std::popcount(mask) % 2 == 0) {
      total += power;
    } else {
      total -= power;
    }
  }
  return total;
}

Rational identity_check_cube(const std::vector<Rational>& a, std::size_t l) {
  if (a.size() < 2) throw PreconditionError("need a_0 and at least one a_i");
  const std::size_t m = a.size() - 2;
  if (l > m) {
    throw PreconditionError("exponent " + std::to_string(l) + " exceeds m = " +
                            std::to_string(m));
  }
  return alternating_cube_sum(a, l);
}

VerificationReport verify_structured_images(const ConstructedSet& c) {
  const auto start = Clock::now();
  VerificationReport report;
  if (c.provenance.size() != c.points.size()) {
    throw PreconditionError("provenance does not match points");
  }
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t i = 0; i < c.provenance.size(); ++i) index.emplace(c.provenance[i], i);
  if (index.size() != c.points.size()) throw PreconditionError("provenance is not a bijection");
  const std::size_t dim = c.points.empty() ? 0 : c.points.front().size();

  auto check = [&](const std::vector<std::size_t>& subset, const std::vector<Rational>& coeffs) {
    ++report.subsets_checked;
    Rational total = 0;
    for (const auto& x : coeffs) total += x;
    bool ok = total == 0;
    for (std::size_t j = 0; ok && j < dim; ++j) {
      Rational acc = 0;
      for (std::size_t i = 0; i < subset.size(); ++i) acc += coeffs[i] * c.points[subset[i]][j];
      ok = acc == 0;
    }
    if (!ok) {
      ++report.violation_count;
      if (report.violations.size() < 1000) report.violations.push_back({subset, {coeffs}});
    }
  };
  auto lookup = [&](const std::vector<std::int64_t>& p) {
    auto it = index.find(p);
    if (it == index.end()) throw PreconditionError("lattice point missing from provenance");
    return it->second;
  };

  if (c.kind == ConstructionKind::Grid) {
    const auto coeffs = finite_difference_coeffs(c.m);
    const auto k = static_cast<std::uint32_t>(c.m + 2);
    for (const auto& line : enumerate_lines(k, c.spec.N)) {
      std::vector<std::size_t> subset;
      for (std::uint32_t s = 1; s <= k; ++s) subset.push_back(lookup(line.point(s)));
      ++report.lines_checked;
      check(subset, coeffs);
    }
    report.max_dependent_size = c.m + 2;
  } else {
    const std::size_t dim_sub = c.m + 1;
    std::vector<Rational> coeffs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim_sub); ++mask)
      coeffs.emplace_back(std::popcount(mask) % 2 == 0 ? 1 : -1);
    for (const auto& s : enumerate_subspaces(c.spec.N, dim_sub)) {
      std::vector<std::size_t> subset;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim_sub); ++mask)
        subset.push_back(lookup(s.point(mask)));
      ++report.subspaces_checked;
      check(subset, coeffs);
    }
    report.max_dependent_size = std::size_t{1} << dim_sub;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string format_report(const VerificationReport& r, bool with_timing) {
  std::ostringstream os;
  os << "subsets_checked=" << r.subsets_checked << "\n"
     << "violations=" << r.violation_count << "\n"
     << "max_dependent_size=" << r.max_dependent_size << "\n"
     << "lines_checked=" << r.lines_checked << "\n"
     << "subspaces_checked=" << r.subspaces_checked << "\n"
     << "holds=" << (r.holds() ? "true" : "false") << "\n";
  for (const auto& v : r.violations) {
    os << "violation=" << join(v.subset) << " witness=" << to_string(v.witness.coefficients)
       << "\n";
  }
  if (with_timing) os << "elapsed_s=" << r.elapsed.count() << "\n";
  return os.str();
}

std::string report_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["subsets_checked"] = r.subsets_checked;
  j["violations"] = r.violation_count;
  j["max_dependent_size"] = r.max_dependent_size;
  j["lines_checked"] = r.lines_checked;
  j["subspaces_checked"] = r.subspaces_checked;
  j["holds"] = r.holds();
  auto list = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    list.push_back({{"subset", v.subset}, {"witness", to_string(v.witness.coefficients)}});
  }
  j["violation_list"] = std::move(list);
  if (with_timing) j["elapsed_s"] = r.elapsed.count();
  return j.dump() + "\n";
}

}  // namespace apx
