#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "apx/construct.hpp"
#include "apx/error.hpp"
#include "apx/incidence.hpp"
#include "apx/verify.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace apx;
using testing::ints;

namespace {

std::vector<RatVector> lattice_points(std::int64_t lo, std::int64_t hi, std::size_t n) {
  std::vector<RatVector> out;
  for (const auto& p : lattice(lo, hi, n)) out.push_back(to_rational(p));
  return out;
}

std::vector<oracle::Vec> pick(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
  std::vector<oracle::Vec> out;
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

// k-subsets whose points have affine rank below k-1 (dependent).
std::set<std::vector<std::size_t>> dependent_subsets(const std::vector<RatVector>& pts, std::size_t k) {
  std::set<std::vector<std::size_t>> out;
  oracle::subsets(pts.size(), k, [&](const std::vector<std::size_t>& s) {
    if (oracle::affinely_dependent(pick(pts, s))) out.insert(s);
    return true;
  });
  return out;
}

// Injective, and for sizes 2..d+1 the image is dependent exactly on incident
// subsets.
void check_removal(const PolyMap& f, const std::vector<RatVector>& pts, const FamilySpec& spec) {
  const auto img = eval_polymap(f, pts);
  for (std::size_t k = 2; k <= spec.d + 1 && k <= pts.size(); ++k) {
    oracle::subsets(pts.size(), k, [&](const std::vector<std::size_t>& s) {
      PointTuple t;
      for (auto i : s) t.push_back(pts[i]);
      CHECK(oracle::affinely_dependent(pick(img, s)) == is_incident(t, spec).incident);
      return true;
    });
  }
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("polymap evaluation examples") {
    PolyMap zero(2, 3);
    CHECK(eval_polymap(zero, ints({4, 5})) == ints({0, 0, 0}));
    PolyMap id(2, 2);
    id.set(0, Monomial({1}), 1);
    id.set(1, Monomial({2}), 1);
    CHECK(eval_polymap(id, ints({4, -5})) == ints({4, -5}));
    PolyMap sq(1, 1);
    sq.set(0, Monomial({1, 1}), 1);
    CHECK(eval_polymap(sq, ints({3})) == ints({9}));
    CHECK(sq.degree() == 2);
    CHECK_THROWS_AS(eval_polymap(sq, ints({3, 1})), DimensionMismatch);
    sq.set(0, Monomial({1, 1}), 0);
    CHECK(sq.coordinate(0).empty());
  }

  TEST_CASE("random polymaps") {
    CHECK_THROWS_AS(random_polymap({2, 3, 2}, 0, 1), PreconditionError);
    CHECK(random_polymap({2, 3, 2}, 100, 9) == random_polymap({2, 3, 2}, 100, 9));
    CHECK_FALSE(random_polymap({2, 3, 2}, 100, 9) == random_polymap({2, 3, 2}, 100, 10));
    auto f = random_polymap({2, 3, 2}, 1000000, 1);
    CHECK(f.source_dim() == 2);
    REQUIRE(f.target_dim() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(f.coordinate(i).size() <= 5);
      for (const auto& [mono, c] : f.coordinate(i)) {
        CHECK_FALSE(mono.empty());
        CHECK(mono.degree() <= 2);
        CHECK(abs(c) <= 1000000);
        CHECK(c.get_den() == 1);
      }
    }
    auto g = random_polymap({2, 1, 1}, 5, 3, true);
    CHECK(g.degree() <= 1);
  }

  TEST_CASE("finite differences annihilate every degree-m polymap on lines") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
      const FamilySpec spec{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 4};
      auto f = random_polymap(spec, 1000, rng(), true);
      auto x = testing::random_matrix(rng, 1, spec.N, -9, 9)[0];
      auto y = testing::random_matrix(rng, 1, spec.N, -9, 9)[0];
      oracle::Vec sum(spec.d);
      long binom = 1;
      for (std::size_t i = 0; i <= spec.m + 1; ++i) {
        oracle::Vec p(spec.N);
        for (std::size_t c = 0; c < spec.N; ++c) p[c] = x[c] + static_cast<long>(i) * y[c];
        const auto v = eval_polymap(f, p);
        for (std::size_t c = 0; c < spec.d; ++c) sum[c] += (i % 2 ? -binom : binom) * v[c];
        binom = binom * static_cast<long>(spec.m + 1 - i) / static_cast<long>(i + 1);
      }
      CHECK(oracle::is_zero(sum));
    }
  }

  TEST_CASE("alternating cube sums annihilate every degree-m polymap") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
      const FamilySpec spec{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
      auto f = random_polymap(spec, 1000, rng(), true);
      auto xs = testing::random_matrix(rng, spec.m + 2, spec.N, -5, 5);
      oracle::Vec sum(spec.d);
      for (std::uint32_t mask = 0; mask < (1u << (spec.m + 1)); ++mask) {
        oracle::Vec p = xs[0];
        for (std::size_t i = 0; i <= spec.m; ++i)
          if (mask >> i & 1)
            for (std::size_t c = 0; c < spec.N; ++c) p[c] += xs[i + 1][c];
        const auto v = eval_polymap(f, p);
        const int sign = __builtin_popcount(mask) % 2 ? -1 : 1;
        for (std::size_t c = 0; c < spec.d; ++c) sum[c] += sign * v[c];
      }
      CHECK(oracle::is_zero(sum));
    }
  }

  TEST_CASE("removal function on the 3x3 grid") {
    const FamilySpec spec{2, 2, 1};
    auto pts = lattice_points(1, 3, 2);
    auto f = incidence_removal_function(pts, spec, 5);
    check_removal(f, pts, spec);
    const auto img = eval_polymap(f, pts);
    // The eight collinear triples of the grid (seven combinatorial lines and
    // the anti-diagonal) stay collinear, and no others become collinear.
    auto before = dependent_subsets(pts, 3);
    CHECK(before.size() == 8);
    CHECK(dependent_subsets(img, 3) == before);
    CHECK(enumerate_lines(3, 2).size() == 7);
  }

  TEST_CASE("removal function on two points") {
    std::vector<RatVector> pts = {ints({1, 2}), ints({3, 4})};
    auto f = incidence_removal_function(pts, {2, 1, 2}, 1);
    auto img = eval_polymap(f, pts);
    CHECK(img[0] != img[1]);
  }

  TEST_CASE("removal function on the 3-cube keeps exactly the coplanar quadruples") {
    const FamilySpec spec{3, 3, 1};
    auto pts = lattice_points(0, 1, 3);
    auto f = incidence_removal_function(pts, spec, 2);
    check_removal(f, pts, spec);
    auto img = eval_polymap(f, pts);
    auto before = dependent_subsets(pts, 4);
    CHECK(before.size() == 12);
    CHECK(dependent_subsets(img, 4) == before);
    std::map<std::vector<std::int64_t>, std::size_t> index;
    const auto lat = lattice(0, 1, 3);
    for (std::size_t i = 0; i < lat.size(); ++i) index[lat[i]] = i;
    for (const auto& s : enumerate_subspaces(3, 2)) {
      std::vector<std::size_t> idx;
      for (std::uint64_t mask = 0; mask < 4; ++mask) idx.push_back(index.at(s.point(mask)));
      std::sort(idx.begin(), idx.end());
      CHECK(before.count(idx) == 1);
    }
  }

  TEST_CASE("removal function rejects repeated points and reports failures") {
    CHECK_THROWS_AS(incidence_removal_function({ints({1}), ints({1})}, {1, 1, 1}, 0), PreconditionError);
    RemovalOptions tight;
    tight.attempts = 1;
    tight.bound = 1;
    auto pts = lattice_points(1, 4, 2);
    bool failed = false;
    try {
      incidence_removal_function(pts, {2, 3, 2}, 0, tight);
    } catch (const ConstructionFailed& e) {
      failed = true;
      CHECK(e.subset().size() >= 2);
      CHECK(e.subset().size() <= 4);
    }
    CHECK(failed);
  }

  TEST_CASE("violation search does not depend on workers") {
    auto pts = lattice_points(1, 4, 2);
    RemovalOptions tight;
    const FamilySpec spec{2, 3, 2};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto f = random_polymap(spec, 1, seed);
      CHECK(find_removal_violation(f, pts, spec, 1) == find_removal_violation(f, pts, spec, 3));
    }
  }

  TEST_CASE("deterministic removal function") {
    DeterministicTrace trace;
    auto pts = std::vector<RatVector>{ints({0, 0}), ints({1, 0}), ints({0, 1})};
    auto f = deterministic_removal_function(pts, {2, 2, 1}, &trace);
    CHECK(trace.non_incident_subsets == 4);
    CHECK(trace.combination_steps >= 1);
    CHECK(trace.combination_steps <= 2);
    check_removal(f, pts, {2, 2, 1});

    auto collinear = std::vector<RatVector>{ints({0}), ints({1}), ints({2})};
    f = deterministic_removal_function(collinear, {1, 1, 1}, &trace);
    check_removal(f, collinear, {1, 1, 1});

    auto grid = lattice_points(1, 3, 2);
    f = deterministic_removal_function(grid, {2, 2, 1}, &trace);
    check_removal(f, grid, {2, 2, 1});
    auto cube = lattice_points(0, 1, 3);
    f = deterministic_removal_function(cube, {3, 3, 1}, &trace);
    check_removal(f, cube, {3, 3, 1});
  }

  TEST_CASE("grid constructions") {
    auto c = grid_construction(1, 2, 7);
    CHECK(c.points.size() == 9);
    CHECK(c.spec == FamilySpec{2, 2, 1});
    std::size_t collinear_fours = 0;
    oracle::subsets(9, 4, [&](const std::vector<std::size_t>& s) {
      collinear_fours += oracle::affine_rank(pick(c.points, s)) < 2;
      return true;
    });
    CHECK(collinear_fours == 0);
    CHECK(c.provenance.size() == 9);
    CHECK(std::set(c.provenance.begin(), c.provenance.end()).size() == 9);
    CHECK(std::set(c.points.begin(), c.points.end()).size() == 9);

    c = grid_construction(2, 2, 7);
    CHECK(c.points.size() == 16);
    CHECK(c.points[0].size() == 3);
    std::size_t coplanar_fives = 0;
    oracle::subsets(16, 5, [&](const std::vector<std::size_t>& s) {
      coplanar_fives += oracle::affine_rank(pick(c.points, s)) < 3;
      return true;
    });
    CHECK(coplanar_fives == 0);
  }

  TEST_CASE("cube constructions") {
    CHECK(cube_band_admits(1, 3));
    CHECK_FALSE(cube_band_admits(1, 5));
    CHECK(cube_band_admits(2, 7));
    CHECK(cube_band_admits(2, 9));
    CHECK_FALSE(cube_band_admits(2, 6));
    CHECK_THROWS_AS(cube_construction(1, 5, 3, 1), PreconditionError);
    auto c = cube_construction(1, 3, 4, 3);
    CHECK(c.points.size() == 16);
    CHECK(c.points[0].size() == 3);
    std::size_t coplanar_fives = 0;
    oracle::subsets(16, 5, [&](const std::vector<std::size_t>& s) {
      coplanar_fives += oracle::affine_rank(pick(c.points, s)) < 3;
      return true;
    });
    CHECK(coplanar_fives == 0);
    CHECK(std::set(c.provenance.begin(), c.provenance.end()).size() == 16);
  }

  TEST_CASE("constructions are reproducible") {
    CHECK(grid_construction(1, 3, 4).points == grid_construction(1, 3, 4).points);
    CHECK(cube_construction(1, 3, 3, 9).map == cube_construction(1, 3, 3, 9).map);
  }

  TEST_CASE("lattice order") {
    auto l = lattice(0, 1, 2);
    CHECK(l == std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
}
