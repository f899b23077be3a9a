// apx: generate point sets with few points on a hyperplane, and check them.
//
// Exit codes: 0 success / property holds, 1 property violated,
// 2 usage or parse error, 3 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "apx/construct.hpp"
#include "apx/error.hpp"
#include "apx/incidence.hpp"
#include "apx/lemmas.hpp"
#include "apx/point_io.hpp"
#include "apx/set_incidence.hpp"
#include "apx/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct Globals {
  unsigned workers = 1;
  std::string summary;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void write_summary(const Globals& g, const std::string& text) {
  if (g.summary.empty()) return;
  std::ofstream os(g.summary);
  if (!os) throw apx::PreconditionError("cannot write " + g.summary);
  os << text;
}

apx::PointFile load_points(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw apx::PreconditionError("cannot open " + path);
  return apx::read_points(is);
}

void save_construction(const apx::ConstructedSet& c, const std::string& out) {
  const std::map<std::string, std::string> meta = {
      {"construction", c.kind == apx::ConstructionKind::Grid ? "grid" : "cube"},
      {"m", std::to_string(c.m)},
      {"N", std::to_string(c.spec.N)},
      {"d", std::to_string(c.spec.d)},
      {"seed", std::to_string(c.seed)},
  };
  std::ofstream os(out);
  if (!os) throw apx::PreconditionError("cannot write " + out);
  apx::write_points(os, c.points, c.spec.d, meta);
  std::ofstream prov(out + ".prov");
  if (!prov) throw apx::PreconditionError("cannot write " + out + ".prov");
  apx::write_provenance(prov, c.provenance);
}

int report_construction(const Globals& g, const apx::ConstructedSet& c, const std::string& out) {
  const char* kind = c.kind == apx::ConstructionKind::Grid ? "grid" : "cube";
  std::cout << "construction=" << kind << "\n"
            << "m=" << c.m << "\nN=" << c.spec.N << "\nd=" << c.spec.d << "\n"
            << "seed=" << c.seed << "\npoints=" << c.points.size() << "\n"
            << "out=" << out << "\nprovenance=" << out << ".prov\n";
  json j;
  j["construction"] = kind;
  j["m"] = c.m;
  j["N"] = c.spec.N;
  j["d"] = c.spec.d;
  j["seed"] = c.seed;
  j["points"] = c.points.size();
  j["out"] = out;
  write_summary(g, j.dump() + "\n");
  return kOk;
}

// Rebuilds the construction record from a point file's metadata and sidecar.
apx::ConstructedSet load_construction(const apx::PointFile& pf, const std::string& path) {
  auto get = [&](const std::string& key) {
    auto it = pf.meta.find(key);
    if (it == pf.meta.end()) throw apx::PreconditionError(path + " has no '" + key + "' metadata");
    return it->second;
  };
  apx::ConstructedSet c;
  const std::string kind = get("construction");
  if (kind == "grid") {
    c.kind = apx::ConstructionKind::Grid;
  } else if (kind == "cube") {
    c.kind = apx::ConstructionKind::Cube;
  } else {
    throw apx::PreconditionError("unknown construction '" + kind + "'");
  }
  c.m = std::stoul(get("m"));
  c.spec = {std::stoul(get("N")), std::stoul(get("d")), c.m};
  c.seed = std::stoull(get("seed"));
  c.points = pf.points;
  std::ifstream prov(path + ".prov");
  if (!prov) throw apx::PreconditionError("missing provenance file " + path + ".prov");
  c.provenance = apx::read_provenance(prov);
  return c;
}

std::string prefixed(const std::string& prefix, const std::string& report) {
  std::istringstream is(report);
  std::string out, line;
  while (std::getline(is, line)) out += prefix + line + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "apx: point sets in almost general position from polynomial maps, with exact "
      "brute-force verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--workers", g.workers, "Worker threads for subset scans (output does not depend on it)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--summary", g.summary, "Also write a one-record JSON summary to this path");

  std::size_t m = 0, n = 0, d = 0, k = 0, trials = 100;
  std::uint64_t seed = 0;
  std::string out, in, family_a, family_b, lemma;
  bool structured = false, timing = false;
  apx::RemovalOptions opts;

  auto add_removal_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "PRNG seed (mt19937_64 via splitmix64)")->required();
    sub->add_option("--out", out, "Output point file; provenance goes to <out>.prov")->required();
    sub->add_option("--attempts", opts.attempts, "Random maps to try before giving up")
        ->capture_default_str();
    sub->add_option("--bound", opts.bound, "Coefficient magnitude bound")->capture_default_str();
  };

  auto* gen_grid = app.add_subcommand(
      "gen-grid",
      "Grid construction: maps [m+2]^N into R^(m+1) by a degree-m incidence removal function. "
      "No m+3 image points lie on a hyperplane, and every combinatorial line becomes m+2 "
      "points on one.");
  gen_grid->add_option("--m", m, "Degree")->required()->check(CLI::PositiveNumber);
  gen_grid->add_option("--N", n, "Source dimension")->required()->check(CLI::PositiveNumber);
  add_removal_flags(gen_grid);

  auto* gen_cube = app.add_subcommand(
      "gen-cube",
      "Cube construction: maps {0,1}^N into R^d by a degree-m incidence removal function, "
      "for 2^(m+1)-1 <= d <= 3*2^m-3. No d+2 image points lie on a hyperplane, and every "
      "(m+1)-dimensional combinatorial subspace becomes 2^(m+1) cohyperplanar points.");
  gen_cube->add_option("--m", m, "Degree")->required()->check(CLI::PositiveNumber);
  gen_cube->add_option("--d", d, "Target dimension")->required()->check(CLI::PositiveNumber);
  gen_cube->add_option("--N", n, "Source dimension")->required()->check(CLI::PositiveNumber);
  add_removal_flags(gen_cube);

  auto* verify = app.add_subcommand(
      "verify",
      "Checks every k-subset for lying on a common hyperplane (almost general position when "
      "k = d+2). With --structured, also checks that line or subspace images satisfy the "
      "alternating-sum dependence with the expected coefficients.");
  verify->add_option("--in", in, "Point file")->required();
  verify->add_option("--k", k, "Subset size (default d+2)");
  verify->add_flag("--structured", structured, "Also check structured images (needs <in>.prov)");
  verify->add_flag("--timing", timing, "Report elapsed time");

  auto* alpha = app.add_subcommand(
      "alpha", "Largest subset in general position (no d+1 points on a hyperplane), exact search.");
  alpha->add_option("--in", in, "Point file")->required();

  auto* incidence = app.add_subcommand(
      "incidence",
      "Decides whether a tuple is incident for the family of coordinate-wise powers of affine "
      "forms of degree <= m into R^d, by the moment-matrix rank test; prints a monomial "
      "certificate otherwise.");
  incidence->add_option("--in", in, "Point file holding the tuple (first point is the base)")
      ->required();
  incidence->add_option("--d", d, "Target dimension")->required()->check(CLI::PositiveNumber);
  incidence->add_option("--m", m, "Degree")->required()->check(CLI::PositiveNumber);

  auto* nullity = app.add_subcommand(
      "nullity", "Nullity of the containment matrix I(A;B), entry 1 iff B_i is a subset of A_j.");
  nullity->add_option("--A", family_a, "Column family, e.g. \"{1};{2};{1,2}\"")->required();
  nullity->add_option("--B", family_b, "Row family")->required();

  std::string names;
  for (const auto& s : apx::lemma_names()) names += (names.empty() ? "" : ", ") + s;
  auto* lemma_check = app.add_subcommand(
      "lemma-check",
      "Randomized exact checks of the supporting lemmas: the alternating cube and line "
      "identities, the nonsingular monomial witness construction, set compression and "
      "extension, kernel-preserving row removal, and affine invariance of incidence.");
  lemma_check->add_option("--name", lemma, "One of: " + names)->required();
  lemma_check->add_option("--trials", trials, "Random instances")->capture_default_str();
  lemma_check->add_option("--seed", seed, "PRNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  opts.workers = g.workers;

  try {
    if (*gen_grid) {
      const auto c = apx::grid_construction(m, n, seed, opts);
      save_construction(c, out);
      return report_construction(g, c, out);
    }
    if (*gen_cube) {
      const auto c = apx::cube_construction(m, d, n, seed, opts);
      save_construction(c, out);
      return report_construction(g, c, out);
    }
    if (*verify) {
      const auto pf = load_points(in);
      const std::size_t size = k ? k : pf.dim + 2;
      const auto report = apx::scan_cohyperplanar(pf.points, size, g.workers);
      std::cout << "points=" << pf.points.size() << "\nk=" << size << "\n"
                << apx::format_report(report, timing);
      bool holds = report.holds();
      json j;
      j["points"] = pf.points.size();
      j["k"] = size;
      j["scan"] = json::parse(apx::report_json(report, timing));
      if (structured) {
        const auto s = apx::verify_structured_images(load_construction(pf, in));
        std::cout << prefixed("structured_", apx::format_report(s, timing));
        j["structured"] = json::parse(apx::report_json(s, timing));
        holds = holds && s.holds();
      }
      write_summary(g, j.dump() + "\n");
      return holds ? kOk : kViolated;
    }
    if (*alpha) {
      const auto pf = load_points(in);
      const auto r = apx::max_general_position_subset(pf.points);
      std::cout << "points=" << pf.points.size() << "\nalpha=" << r.size
                << "\nsubset=" << join(r.subset) << "\n";
      json j;
      j["points"] = pf.points.size();
      j["alpha"] = r.size;
      j["subset"] = r.subset;
      write_summary(g, j.dump() + "\n");
      return kOk;
    }
    if (*incidence) {
      const auto pf = load_points(in);
      const apx::FamilySpec spec{pf.dim, d, m};
      spec.validate();
      const auto v = apx::is_incident(pf.points, spec);
      std::cout << "incident=" << (v.incident ? "true" : "false") << "\n";
      json j;
      j["incident"] = v.incident;
      if (v.certificate) {
        std::string cert;
        for (const auto& f : v.certificate->monomials) cert += (cert.empty() ? "" : ";") + apx::to_string(f);
        std::cout << "certificate=" << cert << "\n";
        j["certificate"] = cert;
      }
      write_summary(g, j.dump() + "\n");
      return kOk;
    }
    if (*nullity) {
      const auto a = apx::parse_set_family(family_a);
      const auto b = apx::parse_set_family(family_b);
      const auto value = apx::nullity(a, b);
      std::cout << "nullity=" << value << "\n";
      json j;
      j["nullity"] = value;
      write_summary(g, j.dump() + "\n");
      return kOk;
    }
    if (*lemma_check) {
      const auto r = apx::run_lemma_check(lemma, trials, seed);
      std::cout << "lemma=" << r.name << "\ntrials=" << r.trials << "\npassed=" << r.passed
                << "\nresult=" << (r.pass() ? "pass" : "fail") << "\n";
      if (!r.pass()) std::cout << "first_failure=" << r.first_failure << "\n";
      json j;
      j["lemma"] = r.name;
      j["trials"] = r.trials;
      j["passed"] = r.passed;
      j["result"] = r.pass() ? "pass" : "fail";
      write_summary(g, j.dump() + "\n");
      return r.pass() ? kOk : kViolated;
    }
  } catch (const apx::ConstructionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << "violation=" << join(e.subset()) << "\n";
    return kViolated;
  } catch (const apx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const apx::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const apx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad metadata value: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
