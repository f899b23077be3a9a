// Acceptance suite: one PASS/FAIL line per criterion. Library results are
// re-checked with the reference implementations in oracles.hpp wherever a
// check is affordable. Exit status is the number of failed criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apx/construct.hpp"
#include "apx/error.hpp"
#include "apx/incidence.hpp"
#include "apx/lemmas.hpp"
#include "apx/set_incidence.hpp"
#include "apx/verify.hpp"
#include "apx/witness.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace apx;

namespace {

// Time limits in seconds.
constexpr double kGridSmallLimit = 1.0;
constexpr double kGridLargeLimit = 600.0;
constexpr double kCubeSmallLimit = 5.0;
constexpr double kCubeLargeLimit = 30.0;
constexpr double kAlphaLimit = 1.0;

constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first one becomes the detail text.
struct Checker {
  Outcome out;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (out.pass) out.detail = what;
    out.pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

std::map<std::vector<std::int64_t>, std::size_t> index_of(const ConstructedSet& c) {
  std::map<std::vector<std::int64_t>, std::size_t> idx;
  for (std::size_t i = 0; i < c.provenance.size(); ++i) idx[c.provenance[i]] = i;
  return idx;
}

bool weighted_sum_vanishes(const std::vector<RatVector>& pts, const std::vector<Rational>& w) {
  oracle::Vec total(pts[0].size());
  Rational weight = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    weight += w[i];
    for (std::size_t j = 0; j < total.size(); ++j) total[j] += w[i] * pts[i][j];
  }
  return weight == 0 && oracle::is_zero(total);
}

std::vector<Rational> line_witness(std::size_t m) {
  if (m == 1) return {1, -2, 1};
  return {1, -3, 3, -1};
}

// Every line image cancels against the expected finite-difference weights.
void check_lines(Checker& ck, const ConstructedSet& c) {
  const auto idx = index_of(c);
  const auto w = line_witness(c.m);
  const auto k = static_cast<std::uint32_t>(c.m + 2);
  for (const auto& line : enumerate_lines(k, c.provenance[0].size())) {
    std::vector<RatVector> pts;
    for (std::uint32_t s = 1; s <= k; ++s) pts.push_back(c.points.at(idx.at(line.point(s))));
    ck.require(weighted_sum_vanishes(pts, w), "line image fails the witness");
  }
}

void check_subspaces(Checker& ck, const ConstructedSet& c) {
  const auto idx = index_of(c);
  for (const auto& sub : enumerate_subspaces(c.provenance[0].size(), c.m + 1)) {
    std::vector<RatVector> pts;
    std::vector<Rational> w;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sub.dim()); ++mask) {
      pts.push_back(c.points.at(idx.at(sub.point(mask))));
      w.push_back(__builtin_popcountll(mask) % 2 ? -1 : 1);
    }
    ck.require(weighted_sum_vanishes(pts, w), "subspace image fails the signed witness");
  }
}

// Oracle rescan: every k-subset must span R^d affinely.
std::size_t oracle_flat_subsets(const std::vector<RatVector>& pts, std::size_t k, std::size_t d) {
  std::size_t bad = 0;
  oracle::subsets(pts.size(), k, [&](const std::vector<std::size_t>& s) {
    std::vector<oracle::Vec> sel;
    for (auto i : s) sel.push_back(pts[i]);
    if (oracle::affine_rank(sel) < d) ++bad;
    return true;
  });
  return bad;
}

Outcome grid_small() {
  Checker ck;
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = grid_construction(1, 2, kSeed);
  const auto rep = scan_cohyperplanar(c.points, 4);
  const auto st = verify_structured_images(c);
  const double dt = seconds_since(t0);
  ck.require(c.points.size() == 9, "expected 9 points");
  ck.require(rep.holds(), "collinear 4-subset found");
  ck.require(oracle_flat_subsets(c.points, 4, 2) == 0, "oracle found a collinear 4-subset");
  ck.require(st.holds() && st.lines_checked == 7, "structured check failed");
  check_lines(ck, c);
  ck.require(dt < kGridSmallLimit, "too slow: " + fmt_seconds(dt));
  if (ck.out.pass) ck.out.detail = "9 points, 0 collinear 4-subsets, 7 lines, " + fmt_seconds(dt);
  return ck.out;
}

Outcome grid_large() {
  Checker ck;
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = grid_construction(2, 3, kSeed);
  const auto rep = scan_cohyperplanar(c.points, 5, 1);
  const auto st = verify_structured_images(c);
  const double dt = seconds_since(t0);
  ck.require(c.points.size() == 64, "expected 64 points");
  ck.require(rep.subsets_checked == 7624512, "wrong subset count");
  ck.require(rep.holds(), "coplanar 5-subset found");
  ck.require(st.holds() && st.lines_checked == 61, "structured check failed");
  check_lines(ck, c);
  // Oracle spot check on random 5-subsets.
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 100000; ++trial) {
    std::vector<std::size_t> all(64);
    std::iota(all.begin(), all.end(), 0);
    std::vector<oracle::Vec> sel;
    for (std::size_t i = 0; i < 5; ++i) {
      std::swap(all[i], all[i + rng() % (64 - i)]);
      sel.push_back(c.points[all[i]]);
    }
    ck.require(oracle::affine_rank(sel) == 3, "oracle found a coplanar 5-subset");
  }
  ck.require(dt < kGridLargeLimit, "too slow: " + fmt_seconds(dt));
  if (ck.out.pass)
    ck.out.detail = "64 points, 7624512 5-subsets clean, 61 lines, " + fmt_seconds(dt);
  return ck.out;
}

Outcome cube(std::size_t m, std::size_t d, double limit) {
  Checker ck;
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = cube_construction(m, d, 4, kSeed);
  const auto rep = scan_cohyperplanar(c.points, d + 2);
  const auto st = verify_structured_images(c);
  const double dt = seconds_since(t0);
  const std::size_t expected = m == 1 ? 4368 : 11440;
  ck.require(c.points.size() == 16, "expected 16 points");
  ck.require(rep.subsets_checked == expected, "wrong subset count");
  ck.require(rep.holds(), "cohyperplanar subset found");
  ck.require(oracle_flat_subsets(c.points, d + 2, d) == 0, "oracle found a cohyperplanar subset");
  ck.require(st.holds(), "structured check failed");
  ck.require(st.subspaces_checked == enumerate_subspaces(4, m + 1).size(),
             "wrong subspace count");
  check_subspaces(ck, c);
  ck.require(dt < limit, "too slow: " + fmt_seconds(dt));
  if (ck.out.pass)
    ck.out.detail = "16 points, " + std::to_string(expected) + " subsets clean, " +
                    std::to_string(st.subspaces_checked) + " subspaces, " + fmt_seconds(dt);
  return ck.out;
}

Rational random_q(std::mt19937_64& rng) {
  Rational q(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 20) + 1);
  q.canonicalize();
  return q;
}

Outcome identities() {
  Checker ck;
  std::mt19937_64 rng(kSeed + 5);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Rational> a(m + 2);
      for (auto& x : a) x = random_q(rng);
      for (std::size_t l = 0; l <= m; ++l) {
        ck.require(identity_check_cube(a, l) == 0, "library sum nonzero");
        Rational s = 0;
        for (unsigned mask = 0; mask < (1u << (m + 1)); ++mask) {
          Rational base = a[0];
          for (std::size_t i = 0; i <= m; ++i)
            if (mask >> i & 1) base += a[i + 1];
          Rational p = 1;
          for (std::size_t e = 0; e < l; ++e) p *= base;
          s += __builtin_popcount(mask) % 2 ? -p : p;
        }
        ck.require(s == 0, "oracle sum nonzero");
      }
    }
  }
  for (std::size_t m = 0; m <= 6; ++m) {
    const auto coeffs = finite_difference_coeffs(m);
    oracle::Mat power(m + 1, oracle::Vec(m + 2));
    for (std::size_t l = 0; l <= m; ++l)
      for (std::size_t i = 0; i <= m + 1; ++i) {
        Rational p = 1;
        for (std::size_t e = 0; e < l; ++e) p *= static_cast<long>(i);
        power[l][i] = p;
      }
    ck.require(oracle::rank(power) == m + 1, "power matrix kernel not one-dimensional");
    ck.require(!oracle::is_zero(coeffs) && oracle::is_zero(oracle::mat_vec(power, coeffs)),
               "coefficients not in the kernel");
    ck.require(kernel_basis(RatMatrix::from_rows(power)).size() == 1, "library kernel size");
  }
  if (ck.out.pass) ck.out.detail = "4000 instances, all l <= m; kernels m=0..6";
  return ck.out;
}

Outcome witness() {
  Checker ck;
  std::mt19937_64 rng(kSeed + 6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random_witness_instance(rng, 5, 3);
    const std::size_t r = inst.ys.size(), n = inst.ys[0].size();
    ck.require(oracle::rank(inst.ys) + inst.m >= r + 1, "instance violates the rank condition");
    std::vector<Monomial> fs;
    try {
      fs = construct_independent_functions(inst.ys, inst.m);
    } catch (const Error& e) {
      ck.require(false, std::string("construction threw: ") + e.what());
      continue;
    }
    ck.require(fs.size() == r, "wrong number of monomials");
    oracle::Mat a(r, oracle::Vec(r));
    for (std::size_t i = 0; i < fs.size() && i < r; ++i) {
      ck.require(fs[i].degree() >= 1 && fs[i].degree() <= inst.m, "monomial degree out of range");
      ck.require(fs[i].max_index() <= n, "monomial index out of range");
      for (std::size_t j = 0; j < r; ++j) a[i][j] = oracle::eval(fs[i].indices(), inst.ys[j]);
    }
    ck.require(oracle::det(a) != 0, "evaluation matrix singular");
  }
  // Rank-one inputs with r = m+1 admit no witness.
  std::size_t rank_one = 0;
  for (unsigned m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        oracle::Vec v(n);
        for (auto& x : v) x = static_cast<long>(rng() % 4 + 1) * (rng() % 2 ? 1 : -1);
        std::set<long> scalars;
        while (scalars.size() < m + 1) {
          const long s = static_cast<long>(rng() % 13) - 6;
          if (s != 0) scalars.insert(s);
        }
        std::vector<RatVector> ys;
        for (long s : scalars) {
          RatVector y(n);
          for (std::size_t j = 0; j < n; ++j) y[j] = v[j] * s;
          ys.push_back(y);
        }
        ck.require(!oracle::find_witness(ys, m).has_value(), "rank-one witness exists");
        bool rejected = false;
        try {
          construct_independent_functions(ys, m);
        } catch (const PreconditionError&) {
          rejected = true;
        }
        ck.require(rejected, "library accepted a rank-one instance");
        ++rank_one;
      }
    }
  }
  if (ck.out.pass)
    ck.out.detail = "300 instances nonsingular; " + std::to_string(rank_one) +
                    " rank-one instances have no witness";
  return ck.out;
}

std::vector<oracle::Set> random_family(std::mt19937_64& rng, std::size_t r, bool nonempty) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = nonempty ? 1 : 0; mask < 64; ++mask) masks.push_back(mask);
  std::shuffle(masks.begin(), masks.end(), rng);
  std::vector<oracle::Set> out;
  for (std::size_t i = 0; i < r; ++i) {
    oracle::Set s;
    for (std::uint32_t b = 0; b < 6; ++b)
      if (masks[i] >> b & 1) s.push_back(b + 1);
    out.push_back(s);
  }
  return out;
}

Outcome compression() {
  Checker ck;
  std::mt19937_64 rng(kSeed + 7);
  std::size_t runs = 0;
  for (bool nonempty : {false, true}) {
    for (auto mode : {NullityMode::ExactZero, NullityMode::AtMostOne}) {
      const std::size_t bound = mode == NullityMode::ExactZero ? 0 : 1;
      for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 1 + rng() % 3;
        const std::size_t limit = mode_limit(mode, m, nonempty);
        const std::size_t r = 1 + rng() % (limit - 1);
        const auto x = random_family(rng, r, nonempty);
        SetFamily s;
        try {
          s = nonempty ? construct_sets_nonempty(x, m, mode) : construct_sets(x, m, mode);
        } catch (const Error& e) {
          ck.require(false, std::string("compression threw: ") + e.what());
          continue;
        }
        ck.require(s.size() == r, "wrong number of sets");
        for (const auto& si : s) {
          ck.require(si.size() <= m, "set larger than m");
          ck.require(!nonempty || !si.empty(), "empty set in non-empty variant");
        }
        ck.require(oracle::containment_nullity(x, s) <= bound,
                   "nullity bound missed for " + to_string(x));
        ++runs;
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, t = rng() % (r + 1);
    oracle::Mat rows;
    std::uniform_int_distribution<long> small(-3, 3), unit(-1, 1);
    do {
      rows.assign(t, oracle::Vec(r));
      for (auto& row : rows)
        for (auto& e : row) e = small(rng);
    } while (t && oracle::rank(rows) < t);
    for (std::size_t i = 0; i < r; ++i) {
      if (!rows.empty() && rng() % 2) {
        rows.push_back(rows[rng() % rows.size()]);
      } else {
        oracle::Vec row(r);
        for (auto& e : row) e = unit(rng);
        rows.push_back(row);
      }
    }
    const auto keep = remove_rows_preserving_kernel(RatMatrix::from_rows(rows), t);
    ck.require(keep.size() == r && std::is_sorted(keep.begin(), keep.end()), "bad row selection");
    for (std::size_t i = 0; i < t && i < keep.size(); ++i)
      ck.require(keep[i] == i, "protected row dropped");
    oracle::Mat sub;
    for (auto i : keep) sub.push_back(rows.at(i));
    // The kept rows are a subset, so equal rank means equal kernel.
    ck.require(oracle::rank(sub) == oracle::rank(rows), "kernel changed");
  }
  if (ck.out.pass)
    ck.out.detail = std::to_string(runs) + " compressions within bound; 200 row removals exact";
  return ck.out;
}

Outcome incidence_equivalence() {
  Checker ck;
  std::mt19937_64 rng(kSeed + 8);
  std::size_t incident = 0, witnessed = 0;
  struct Ground {
    std::size_t n;
    std::vector<RatVector> pts;
  };
  std::vector<Ground> grounds;
  {
    Ground g{3, {}};
    for (const auto& p : lattice(0, 1, 3)) g.pts.push_back(to_rational(p));
    grounds.push_back(g);
    Ground h{2, {}};
    for (const auto& p : lattice(1, 3, 2)) h.pts.push_back(to_rational(p));
    grounds.push_back(h);
  }
  for (const auto& g : grounds) {
    for (unsigned m = 1; m <= 2; ++m) {
      const std::size_t d = oracle::monomials(static_cast<unsigned>(g.n), 1, m).size();
      const FamilySpec spec{g.n, d, m};
      std::vector<oracle::FamilyMember> members;
      for (int i = 0; i < 50; ++i) members.push_back(oracle::sample_member(rng, g.n, d, m));
      std::vector<std::vector<RatVector>> images(members.size());
      for (std::size_t i = 0; i < members.size(); ++i)
        for (const auto& p : g.pts) images[i].push_back(members[i](p));
      const std::size_t top = std::min(d + 1, g.pts.size());
      for (std::size_t k = 2; k <= top; ++k) {
        oracle::subsets(g.pts.size(), k, [&](const std::vector<std::size_t>& s) {
          PointTuple t;
          for (auto i : s) t.push_back(g.pts[i]);
          const auto v = is_incident(t, spec);
          if (v.incident) {
            ++incident;
            ck.require(!v.certificate, "incident tuple carries a certificate");
            for (const auto& img : images) {
              std::vector<oracle::Vec> sel;
              for (auto i : s) sel.push_back(img[i]);
              ck.require(oracle::affinely_dependent(sel), "incident tuple independent under a map");
            }
          } else {
            ++witnessed;
            ck.require(v.certificate.has_value(), "missing certificate");
            if (!v.certificate) return true;
            const auto& fs = v.certificate->monomials;
            ck.require(fs.size() == k - 1, "certificate has the wrong size");
            oracle::Mat a(k - 1, oracle::Vec(k - 1));
            for (std::size_t i = 0; i < fs.size() && i < k - 1; ++i) {
              ck.require(fs[i].degree() >= 1 && fs[i].degree() <= m, "certificate degree");
              for (std::size_t j = 0; j + 1 < k; ++j)
                a[i][j] = oracle::eval(fs[i].indices(), t[j + 1]) -
                          oracle::eval(fs[i].indices(), t[0]);
            }
            ck.require(oracle::det(a) != 0, "certificate matrix singular");
          }
          return true;
        });
      }
    }
  }
  if (ck.out.pass)
    ck.out.detail = std::to_string(incident) + " incident tuples dependent under 50 maps; " +
                    std::to_string(witnessed) + " certificates verified";
  return ck.out;
}

Outcome union_bound() {
  Checker ck;
  std::size_t pairs = 0, smallest = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<RatVector> pts;
    for (const auto& p : lattice(0, 1, n)) pts.push_back(to_rational(p));
    const auto minimal = minimal_incident_subsets(pts, FamilySpec{n, 3, 1}, 4);
    for (const auto& s : minimal) {
      std::vector<oracle::Vec> sel;
      for (auto i : s) sel.push_back(pts[i]);
      ck.require(oracle::incident_by_search(sel, 1, 3), "reported set not incident");
      for (std::size_t drop = 0; drop < sel.size(); ++drop) {
        auto fewer = sel;
        fewer.erase(fewer.begin() + static_cast<long>(drop));
        ck.require(fewer.size() < 2 || !oracle::incident_by_search(fewer, 1, 3),
                   "reported set not minimal");
      }
    }
    for (std::size_t i = 0; i < minimal.size(); ++i)
      for (std::size_t j = i + 1; j < minimal.size(); ++j) {
        std::set<std::size_t> u(minimal[i].begin(), minimal[i].end());
        u.insert(minimal[j].begin(), minimal[j].end());
        ck.require(u.size() >= 6, "union smaller than 6");
        if (pairs == 0 || u.size() < smallest) smallest = u.size();
        ++pairs;
      }
  }
  ck.require(pairs > 0, "no pairs examined");
  if (ck.out.pass)
    ck.out.detail = std::to_string(pairs) + " pairs, smallest union " + std::to_string(smallest);
  return ck.out;
}

Outcome alpha() {
  Checker ck;
  auto timed = [&](const std::vector<RatVector>& pts, std::size_t expected, const char* what) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = max_general_position_subset(pts);
    const double dt = seconds_since(t0);
    ck.require(res.size == expected, std::string(what) + ": got " + std::to_string(res.size));
    ck.require(dt < kAlphaLimit, std::string(what) + " too slow: " + fmt_seconds(dt));
  };
  std::vector<RatVector> grid;
  for (const auto& p : lattice(0, 2, 2)) grid.push_back(to_rational(p));
  timed(grid, 6, "3x3 grid");
  std::vector<RatVector> line;
  for (long i = 0; i < 4; ++i) line.push_back(RatVector{Rational(i), Rational(2 * i + 1)});
  timed(line, 2, "collinear");
  std::mt19937_64 rng(kSeed + 10);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (std::size_t size = 4; size <= 12; ++size) {
    std::vector<RatVector> pts;
    // Draw until the oracle confirms no 4 coplanar points.
    do {
      pts.assign(size, RatVector(3));
      for (auto& p : pts)
        for (auto& x : p) x = coord(rng);
    } while (oracle_flat_subsets(pts, 4, 3) != 0);
    timed(pts, size, "generic");
  }
  if (ck.out.pass) ck.out.detail = "grid 6, collinear 2, generic sets of 4..12 in R^3 full";
  return ck.out;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(APX_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

Outcome determinism() {
  Checker ck;
  const fs::path dir = fs::temp_directory_path() / ("apx_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> gens = {"gen-grid --m 1 --N 3 --seed 11",
                                         "gen-grid --m 2 --N 2 --seed 12",
                                         "gen-cube --m 1 --d 3 --N 4 --seed 13"};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto a = (dir / ("g" + std::to_string(g) + ".pts")).string();
    // Same flags twice, including the output path.
    const auto ra = run_cli(gens[g] + " --out " + a);
    const auto first = slurp(a), first_prov = slurp(a + ".prov");
    const auto rb = run_cli(gens[g] + " --out " + a);
    ck.require(ra.code == 0 && rb.code == 0, gens[g] + " failed");
    ck.require(ra.out == rb.out, gens[g] + ": reports differ");
    ck.require(!first.empty() && first == slurp(a), gens[g] + ": point files differ");
    ck.require(first_prov == slurp(a + ".prov"), gens[g] + ": sidecars differ");
    std::string reports[3];
    const unsigned workers[3] = {1, 2, 4};
    for (int w = 0; w < 3; ++w) {
      const auto r = run_cli("--workers " + std::to_string(workers[w]) + " verify --in " + a +
                             " --structured");
      ck.require(r.code == 0, gens[g] + ": verify failed");
      reports[w] = r.out;
    }
    ck.require(reports[0] == reports[1] && reports[0] == reports[2],
               gens[g] + ": verify output depends on --workers");
  }
  fs::remove_all(dir);
  if (ck.out.pass) ck.out.detail = "3 generators byte-identical; verify equal for 1, 2, 4 workers";
  return ck.out;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"grid m=1 N=2", grid_small},
      {"grid m=2 N=3", grid_large},
      {"cube m=1 d=3 N=4", [] { return cube(1, 3, kCubeSmallLimit); }},
      {"cube m=2 d=7 N=4", [] { return cube(2, 7, kCubeLargeLimit); }},
      {"alternating identities", identities},
      {"independent monomials", witness},
      {"set compression", compression},
      {"incidence oracle agreement", incidence_equivalence},
      {"minimal incident unions", union_bound},
      {"general position oracle", alpha},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = guarded(criteria[i].second);
    if (!res.pass) ++failed;
    std::cout << (res.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": "
              << res.detail << " [" << fmt_seconds(seconds_since(t0)) << "]" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed;
}
