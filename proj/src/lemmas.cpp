#include "apx/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "apx/construct.hpp"
#include "apx/error.hpp"
#include "apx/incidence.hpp"
#include "apx/verify.hpp"
#include "apx/witness.hpp"

namespace apx {
namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

RatVector random_int_vector(Rng& rng, std::size_t n, long lo, long hi, bool nonzero) {
  RatVector v(n);
  for (auto& x : v) {
    long c;
    do c = uniform(rng, lo, hi);
    while (nonzero && c == 0);
    x = c;
  }
  return v;
}

// Returns an empty string on success, otherwise a short description.
using Trial = std::function<std::string(Rng&)>;

std::string check_cube_identity(Rng& rng) {
  const std::size_t m = uniform_size(rng, 1, 4);
  std::vector<Rational> a(m + 2);
  for (auto& x : a) x = random_rational(rng, 1000, 50);
  for (std::size_t l = 0; l <= m; ++l) {
    if (identity_check_cube(a, l) != 0) {
      return "m=" + std::to_string(m) + " l=" + std::to_string(l) + " a=" + to_string(a);
    }
  }
  return {};
}

std::string check_line_identity(Rng& rng) {
  const FamilySpec spec{uniform_size(rng, 1, 4), uniform_size(rng, 1, 3), uniform_size(rng, 1, 4)};
  const PolyMap f = random_polymap(spec, 50, rng(), true);
  const RatVector x = random_int_vector(rng, spec.N, -9, 9, false);
  const RatVector y = random_int_vector(rng, spec.N, -9, 9, false);
  const auto coeffs = finite_difference_coeffs(spec.m);
  RatVector sum(spec.d);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    RatVector p(spec.N);
    for (std::size_t c = 0; c < spec.N; ++c) p[c] = x[c] + Rational(static_cast<long>(i)) * y[c];
    const RatVector fp = eval_polymap(f, p);
    for (std::size_t c = 0; c < spec.d; ++c) sum[c] += coeffs[i] * fp[c];
  }
  for (const auto& s : sum) {
    if (s != 0) return "m=" + std::to_string(spec.m) + " x=" + to_string(x) + " y=" + to_string(y);
  }
  return {};
}

std::string check_finite_difference(std::size_t m) {
  RatMatrix power(m + 1, m + 2);
  for (std::size_t l = 0; l <= m; ++l) {
    for (std::size_t i = 0; i <= m + 1; ++i) {
      Rational v = 1;
      for (std::size_t e = 0; e < l; ++e) v *= static_cast<long>(i);
      power(l, i) = v;
    }
  }
  const auto ker = kernel_basis(power);
  const auto coeffs = finite_difference_coeffs(m);
  if (ker.size() != 1) return "m=" + std::to_string(m) + " kernel dimension " + std::to_string(ker.size());
  const Rational scale = ker[0][0];
  for (std::size_t i = 0; i <= m + 1; ++i) {
    if (scale == 0 || ker[0][i] / scale != coeffs[i]) return "m=" + std::to_string(m) + " mismatch";
  }
  return {};
}

std::string check_witness(Rng& rng) {
  const auto inst = random_witness_instance(rng);
  const auto fs = construct_independent_functions(inst.ys, inst.m);
  auto describe = [&] {
    std::ostringstream os;
    os << "m=" << inst.m << " ys=";
    for (const auto& y : inst.ys) os << to_string(y);
    return os.str();
  };
  if (fs.size() != inst.ys.size()) return describe();
  for (const auto& f : fs) {
    if (f.empty() || f.degree() > inst.m) return describe();
  }
  if (determinant(evaluation_matrix(fs, inst.ys)) == 0) return describe();
  return {};
}

std::size_t kernel_dim(const SetFamily& x, const SetFamily& s) {
  return kernel_basis(incidence_matrix(x, s).matrix).size();
}

std::string check_compression(Rng& rng, bool nonempty) {
  const std::size_t m = uniform_size(rng, 1, 3);
  const NullityMode mode = uniform(rng, 0, 1) ? NullityMode::AtMostOne : NullityMode::ExactZero;
  const std::size_t limit = mode_limit(mode, m, nonempty);
  const std::size_t available = nonempty ? 63 : 64;
  const std::size_t r = uniform_size(rng, 1, std::min(limit - 1, available));
  const SetFamily x = random_distinct_family(rng, 6, r, nonempty);
  const SetFamily s = nonempty ? construct_sets_nonempty(x, m, mode) : construct_sets(x, m, mode);
  const std::size_t bound = mode == NullityMode::ExactZero ? 0 : 1;
  const std::string label = "m=" + std::to_string(m) + " X=" + to_string(x);
  if (s.size() != x.size()) return label;
  for (const auto& set : s) {
    if (set.size() > m || (nonempty && set.empty())) return label;
  }
  if (kernel_dim(x, s) > bound) return label;
  return {};
}

std::string check_extension(Rng& rng) {
  const std::size_t m = uniform_size(rng, 1, 3);
  const bool nonempty = uniform(rng, 0, 1) == 1;
  const std::size_t limit = mode_limit(NullityMode::AtMostOne, m, nonempty);
  const std::size_t r = uniform_size(rng, 1, limit - 1);
  const SetFamily x = random_distinct_family(rng, 6, r, nonempty);
  const std::size_t prefix_limit = mode_limit(NullityMode::ExactZero, m, nonempty);
  const std::size_t t = uniform_size(rng, 0, std::min(r, prefix_limit - 1));
  const SetFamily head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(t));
  SetFamily prefix;
  if (t > 0) {
    prefix = nonempty ? construct_sets_nonempty(head, m, NullityMode::ExactZero)
                      : construct_sets(head, m, NullityMode::ExactZero);
  }
  const SetFamily tail = extend_sets(x, prefix, m, nonempty);
  SetFamily all = prefix;
  all.insert(all.end(), tail.begin(), tail.end());
  const std::string label = "m=" + std::to_string(m) + " t=" + std::to_string(t) + " X=" + to_string(x);
  if (all.size() != r) return label;
  for (const auto& set : tail) {
    if (set.size() > m || (nonempty && set.empty())) return label;
  }
  if (kernel_dim(x, all) > 1) return label;
  return {};
}

std::string check_row_removal(Rng& rng) {
  const std::size_t r = uniform_size(rng, 1, 5);
  const std::size_t t = uniform_size(rng, 0, r);
  std::vector<RatVector> rows;
  while (true) {
    rows.clear();
    for (std::size_t i = 0; i < t; ++i) rows.push_back(random_int_vector(rng, r, -3, 3, false));
    if (t == 0 || rank(RatMatrix::from_rows(rows)) == t) break;
  }
  for (std::size_t i = 0; i < r; ++i) {
    switch (rows.empty() ? 0 : uniform(rng, 0, 2)) {
      case 0:
        rows.push_back(random_int_vector(rng, r, -2, 2, false));
        break;
      case 1:
        rows.push_back(rows[uniform_size(rng, 0, rows.size() - 1)]);
        break;
      default: {
        RatVector v(r);
        for (const auto& row : rows) {
          const long c = uniform(rng, -1, 1);
          for (std::size_t j = 0; j < r; ++j) v[j] += c * row[j];
        }
        rows.push_back(v);
      }
    }
  }
  const RatMatrix a = RatMatrix::from_rows(rows);
  const auto keep = remove_rows_preserving_kernel(a, t);
  const std::string label = "r=" + std::to_string(r) + " t=" + std::to_string(t);
  if (keep.size() != r) return label;
  for (std::size_t i = 0; i < t; ++i) {
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) return label;
  }
  const RatMatrix sub = a.select_rows(keep);
  const auto ker = kernel_basis(sub);
  if (ker.size() != kernel_basis(a).size()) return label;
  for (const auto& v : ker) {
    for (const auto& c : a.apply(v)) {
      if (c != 0) return label;
    }
  }
  return {};
}

std::string check_affine_invariance(Rng& rng) {
  const FamilySpec spec{uniform_size(rng, 1, 3), uniform_size(rng, 1, 4), uniform_size(rng, 1, 2)};
  const std::size_t size = uniform_size(rng, 2, spec.d + 1);
  PointTuple t;
  if (uniform(rng, 0, 1) == 0) {
    for (std::size_t i = 0; i < size; ++i) t.push_back(random_int_vector(rng, spec.N, -3, 3, false));
  } else {
    const RatVector x = random_int_vector(rng, spec.N, -3, 3, false);
    const RatVector y = random_int_vector(rng, spec.N, -2, 2, false);
    for (std::size_t i = 0; i < size; ++i) {
      RatVector p(spec.N);
      for (std::size_t c = 0; c < spec.N; ++c) p[c] = x[c] + Rational(static_cast<long>(i)) * y[c];
      t.push_back(p);
    }
  }
  RatMatrix a(spec.N, spec.N);
  do {
    for (std::size_t i = 0; i < spec.N; ++i) {
      for (std::size_t j = 0; j < spec.N; ++j) a(i, j) = random_rational(rng, 3, 2);
    }
  } while (determinant(a) == 0);
  const RatVector b = random_int_vector(rng, spec.N, -5, 5, false);
  PointTuple moved;
  for (const auto& p : t) {
    RatVector q = a.apply(p);
    for (std::size_t c = 0; c < spec.N; ++c) q[c] += b[c];
    moved.push_back(q);
  }
  if (is_incident(t, spec).incident != is_incident(moved, spec).incident) {
    std::ostringstream os;
    os << "N=" << spec.N << " d=" << spec.d << " m=" << spec.m << " T=";
    for (const auto& p : t) os << to_string(p);
    return os.str();
  }
  return {};
}

const std::map<std::string, Trial>& trials_by_name() {
  static const std::map<std::string, Trial> table = {
      {"cube-identity", check_cube_identity},
      {"line-identity", check_line_identity},
      {"witness", check_witness},
      {"compression", [](Rng& rng) { return check_compression(rng, false); }},
      {"compression-nonempty", [](Rng& rng) { return check_compression(rng, true); }},
      {"extension", check_extension},
      {"row-removal", check_row_removal},
      {"affine-invariance", check_affine_invariance},
  };
  return table;
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  Rational q(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  q.canonicalize();
  return q;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = {
      "cube-identity", "line-identity",  "finite-difference", "witness",          "compression",
      "compression-nonempty", "extension", "row-removal",    "affine-invariance"};
  return names;
}

LemmaReport run_lemma_check(const std::string& name, std::size_t trials, std::uint64_t seed) {
  LemmaReport report;
  report.name = name;
  auto record = [&](const std::string& failure) {
    ++report.trials;
    if (failure.empty()) {
      ++report.passed;
    } else if (report.first_failure.empty()) {
      report.first_failure = failure;
    }
  };
  if (name == "finite-difference") {
    // Deterministic: one trial per degree 0..6.
    for (std::size_t m = 0; m <= 6; ++m) record(check_finite_difference(m));
    return report;
  }
  const auto& table = trials_by_name();
  const auto it = table.find(name);
  if (it == table.end()) throw PreconditionError("unknown lemma: " + name);
  Rng rng(mix_seed(seed));
  for (std::size_t i = 0; i < trials; ++i) {
    try {
      record(it->second(rng));
    } catch (const Error& e) {
      record(std::string("trial ") + std::to_string(i) + ": " + e.what());
    }
  }
  return report;
}

WitnessInstance random_witness_instance(std::mt19937_64& rng, std::size_t max_n,
                                        std::size_t max_m) {
  while (true) {
    WitnessInstance inst;
    const std::size_t n = uniform_size(rng, 1, max_n);
    inst.m = uniform_size(rng, 1, max_m);
    const std::size_t r_max = std::min(2 * inst.m + 2, n + inst.m - 1);
    const std::size_t r = uniform_size(rng, 1, r_max);
    const std::size_t rho_lo = r + 1 > inst.m ? std::max<std::size_t>(1, r + 1 - inst.m) : 1;
    const std::size_t rho_hi = std::min(n, r);
    if (rho_lo > rho_hi) continue;
    const std::size_t rho = uniform_size(rng, rho_lo, rho_hi);

    std::vector<RatVector> basis;
    do {
      basis.clear();
      for (std::size_t i = 0; i < rho; ++i) basis.push_back(random_int_vector(rng, n, -4, 4, true));
    } while (rank(RatMatrix::from_rows(basis)) != rho);

    inst.ys = basis;
    bool ok = true;
    for (std::size_t i = rho; i < r && ok; ++i) {
      ok = false;
      for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
        RatVector v(n);
        for (const auto& b : basis) {
          const long c = uniform(rng, -2, 2);
          for (std::size_t j = 0; j < n; ++j) v[j] += c * b[j];
        }
        const bool zero_coord = std::any_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
        const bool repeated = std::find(inst.ys.begin(), inst.ys.end(), v) != inst.ys.end();
        if (!zero_coord && !repeated) {
          inst.ys.push_back(v);
          ok = true;
        }
      }
    }
    if (!ok) continue;
    std::shuffle(inst.ys.begin(), inst.ys.end(), rng);
    return inst;
  }
}

SetFamily random_distinct_family(std::mt19937_64& rng, std::size_t ground, std::size_t r,
                                 bool nonempty) {
  const std::uint64_t total = std::uint64_t{1} << ground;
  const std::uint64_t first = nonempty ? 1 : 0;
  if (r > total - first) throw PreconditionError("family larger than the power set");
  std::vector<std::uint64_t> masks(total - first);
  for (std::uint64_t i = 0; i < masks.size(); ++i) masks[i] = first + i;
  std::shuffle(masks.begin(), masks.end(), rng);
  SetFamily out;
  for (std::size_t i = 0; i < r; ++i) {
    IndexSet s;
    for (std::size_t b = 0; b < ground; ++b) {
      if (masks[i] >> b & 1) s.push_back(static_cast<std::uint32_t>(b + 1));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace apx
