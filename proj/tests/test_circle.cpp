#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "diskinterp/circle.hpp"
#include "diskinterp/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace diskinterp;
using cd = std::complex<double>;

TEST_CASE("normalize_angle") {
  CHECK(normalize_angle(0.0).radians() == 0.0);
  CHECK(normalize_angle(kTwoPi).radians() == 0.0);
  CHECK(normalize_angle(-kPi / 2).radians() == doctest::Approx(3 * kPi / 2).epsilon(1e-15));
  CHECK(normalize_angle(-1e-300).radians() == 0.0);
  for (double t : {-100.0, -7.0, 3.0, 6.3, 1e6}) {
    const double r = normalize_angle(t).radians();
    CHECK(r >= 0.0);
    CHECK(r < kTwoPi);
  }
  CHECK_THROWS_AS(normalize_angle(std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(normalize_angle(INFINITY), InvalidArgument);
}

TEST_CASE("angular_distance") {
  const auto a = [](double t) { return normalize_angle(t); };
  CHECK(angular_distance(a(0), a(0)) == 0.0);
  CHECK(angular_distance(a(0), a(kPi)) == doctest::Approx(kPi));
  CHECK(angular_distance(a(0.1), a(kTwoPi - 0.1)) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(angular_distance(a(kTwoPi - 0.1), a(0.1)) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("arc and set invariants") {
  CHECK_THROWS_AS(Arc(Angle{}, 0.0), InvalidArgument);
  CHECK_THROWS_AS(Arc(Angle{}, kPi), InvalidArgument);
  const Arc arc(normalize_angle(0.0), 0.5);
  CHECK(arc.contains(normalize_angle(-0.4)));
  CHECK_FALSE(arc.contains(normalize_angle(0.5)));

  CHECK_THROWS_AS(FiniteBoundarySet(std::vector<double>{}), InvalidArgument);
  CHECK_THROWS_AS(FiniteBoundarySet(std::vector<double>{0.0, kTwoPi}), InvalidArgument);
  CHECK_THROWS_AS(FiniteBoundarySet(std::vector<double>{1.0, 1.0}), InvalidArgument);
  const FiniteBoundarySet s(std::vector<double>{3.0, -1.0, 1.0});
  CHECK(std::is_sorted(s.points().begin(), s.points().end()));

  CHECK_THROWS_AS(BoundaryData(s, {cd(1)}), InvalidArgument);
  const BoundaryData d(s, {cd(0.5), cd(0, -2), cd(1, 1)});
  CHECK(d.sup_norm() == 2.0);
  const BoundaryData z(s, {cd(0), cd(0), cd(0)});
  CHECK(z.sup_norm() == 0.0);
}

namespace {

BoundaryData make(std::vector<double> thetas, std::vector<cd> values) {
  return BoundaryData::from_pairs(thetas, values);
}

double oscillation(const BoundaryData& d, const std::vector<std::size_t>& members) {
  double osc = 0.0;
  for (auto i : members)
    for (auto j : members) osc = std::max(osc, std::abs(d.value(i) - d.value(j)));
  return osc;
}

void check_invariants(const BoundaryData& d, const Clustering& c, double eps) {
  REQUIRE(c.size() >= 1);
  CHECK(c.size() <= d.size());
  CHECK(c.oscillation_bound == eps);
  std::vector<int> seen(d.size(), 0);
  for (const auto& cl : c.clusters) {
    for (auto i : cl.members) ++seen[i];
    CHECK(oscillation(d, cl.members) < eps);
    CHECK(std::find(cl.members.begin(), cl.members.end(), cl.representative) != cl.members.end());
    for (auto i : cl.members) CHECK(cl.arc.contains(d.set()[i]));
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (j == k) continue;
      const auto& arc = c.clusters[k].arc;
      for (auto i : c.clusters[j].members) {
        const double dist = angular_distance(d.set()[i], arc.center());
        CHECK_FALSE(arc.contains(d.set()[i]));
        CHECK(dist > arc.half_width());
      }
      // Arcs are disjoint: centers farther apart than the two half-widths.
      CHECK(angular_distance(arc.center(), c.clusters[j].arc.center()) >
            arc.half_width() + c.clusters[j].arc.half_width());
    }
  }
}

}  // namespace

TEST_CASE("cluster_by_oscillation examples") {
  SUBCASE("singleton") {
    const auto d = make({1.3}, {cd(5, -2)});
    const auto c = cluster_by_oscillation(d, 0.5);
    REQUIRE(c.size() == 1);
    CHECK(c.clusters[0].members == std::vector<std::size_t>{0});
    CHECK(c.clusters[0].representative == 0);
    CHECK(c.clusters[0].arc.half_width() == doctest::Approx(kPi / 2));
    // Any epsilon, even a tiny one.
    CHECK(cluster_by_oscillation(d, 1e-300).size() == 1);
  }
  SUBCASE("oscillation forces a split") {
    const auto d = make({0.0, kPi}, {cd(0), cd(1)});
    // Brute force over both partitions of two points: only the split one
    // keeps the oscillation below 0.5.
    const double eps = 0.5;
    const bool together_ok = oscillation(d, {0, 1}) < eps;
    const bool split_ok = oscillation(d, {0}) < eps && oscillation(d, {1}) < eps;
    CHECK_FALSE(together_ok);
    CHECK(split_ok);
    const auto c = cluster_by_oscillation(d, eps);
    CHECK(c.size() == 2);
    check_invariants(d, c, eps);
  }
  SUBCASE("close values merge") {
    const auto d = make({0.0, 0.01}, {cd(0.1), cd(0.1, 0.001)});
    CHECK(std::abs(d.value(0) - d.value(1)) == doctest::Approx(0.001));
    const auto c = cluster_by_oscillation(d, 0.5);
    REQUIRE(c.size() == 1);
    CHECK(c.clusters[0].members.size() == 2);
    check_invariants(d, c, 0.5);
  }
  CHECK_THROWS_AS(cluster_by_oscillation(make({0.0}, {cd(1)}), 0.0), InvalidArgument);
  CHECK_THROWS_AS(cluster_by_oscillation(make({0.0}, {cd(1)}), -1.0), InvalidArgument);
}

TEST_CASE("wraparound merge") {
  // Widest gap runs from 2.0 to 4.0, so the sweep starts at 4.0 and yields
  // {4.0} {5.0, 0.5} {1.0, 2.0}; the last and first groups then merge.
  const auto d = make({0.5, 1.0, 2.0, 4.0, 5.0}, {cd(3), cd(0.05), cd(0), cd(0), cd(3)});
  const auto c = cluster_by_oscillation(d, 0.1);
  check_invariants(d, c, 0.1);
  REQUIRE(c.size() == 2);
  std::vector<double> merged;
  for (auto i : c.clusters[0].members) merged.push_back(d.set()[i].radians());
  CHECK(merged == std::vector<double>{1.0, 2.0, 4.0});
  CHECK(c.clusters[0].arc.half_width() == doctest::Approx(1.5 + 0.5 / 4));
}

TEST_CASE("representative is the first member counter-clockwise") {
  // The zero-valued cluster {4.0, 5.0, 0.5} crosses angle 0.
  const auto d = make({0.5, 1.0, 2.0, 4.0, 5.0}, {cd(0), cd(3), cd(3), cd(0), cd(0)});
  const auto c = cluster_by_oscillation(d, 0.1);
  check_invariants(d, c, 0.1);
  REQUIRE(c.size() == 2);
  CHECK(c.clusters[0].members.size() == 3);
  CHECK(representative_of(c, d, 0).first.radians() == 4.0);
}

TEST_CASE("representative_of") {
  const auto d = make({0.0, 0.01}, {cd(0.1), cd(0.1, 0.001)});
  const auto c = cluster_by_oscillation(d, 0.5);
  const auto [angle, value] = representative_of(c, d, 0);
  // Widest gap ends at 0, so the sweep starts there.
  CHECK(angle.radians() == 0.0);
  CHECK(value == cd(0.1));
  CHECK_THROWS_AS(representative_of(c, d, 1), std::out_of_range);

  const auto single = make({2.5}, {cd(-1)});
  const auto cs = cluster_by_oscillation(single, 1.0);
  CHECK(representative_of(cs, single, 0).first.radians() == 2.5);
}

TEST_CASE("clustering properties on random data") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = testing::random_problem(rng, 15);
    const double eps = 0.05 + 1.5 * testing::uniform(rng);
    const auto c = cluster_by_oscillation(d, eps);
    check_invariants(d, c, eps);

    // Determinism.
    const auto again = cluster_by_oscillation(d, eps);
    REQUIRE(again.size() == c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(again.clusters[k].members == c.clusters[k].members);
      CHECK(again.clusters[k].representative == c.clusters[k].representative);
    }

    // Rotation equivariance.
    const double phi = kTwoPi * testing::uniform(rng);
    std::vector<double> rotated;
    for (Angle a : d.set().points()) rotated.push_back(a.radians() + phi);
    const BoundaryData dr =
        BoundaryData::from_pairs(rotated, std::vector<cd>(d.values().begin(), d.values().end()));
    const auto cr = cluster_by_oscillation(dr, eps);
    REQUIRE(cr.size() == c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      // Same cluster order up to a cyclic shift: find the rotated match.
      const Angle rep = d.set()[c.clusters[k].representative].rotated(phi);
      bool found = false;
      for (const auto& other : cr.clusters) {
        if (angular_distance(dr.set()[other.representative], rep) < 1e-12) {
          found = true;
          REQUIRE(other.members.size() == c.clusters[k].members.size());
          for (std::size_t m = 0; m < other.members.size(); ++m) {
            CHECK(angular_distance(dr.set()[other.members[m]],
                                   d.set()[c.clusters[k].members[m]].rotated(phi)) < 1e-12);
          }
        }
      }
      CHECK(found);
    }
  }
}
