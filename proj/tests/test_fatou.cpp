#include <cmath>
#include <random>

#include "diskinterp/error.hpp"
#include "diskinterp/fatou.hpp"
#include "diskinterp/verify.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace diskinterp;
using cd = std::complex<double>;

namespace {

FatouFunction fatou_of(std::vector<double> thetas) {
  return build_fatou(FiniteBoundarySet(thetas));
}

// Closed forms from simplifying F/(1+F) by hand.
cd single_peak_oracle(cd z) { return (1.0 + z) / 2.0; }
cd two_peak_oracle(cd z) { return (2.0 + 2.0 * z * z) / (3.0 + z * z); }

// Smallest N with rho^N < target, by repeated multiplication.
std::int64_t brute_power(double rho, double target) {
  double p = rho;
  std::int64_t n = 1;
  while (!(p < target)) {
    p *= rho;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("build_fatou closed forms") {
  const auto one = fatou_of({0.0});
  CHECK(eval_fatou(one, 1.0) == cd(1.0));
  CHECK(std::abs(eval_fatou(one, -1.0)) < 1e-15);
  CHECK(std::abs(eval_fatou(one, cd(0, 1))) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
  CHECK(eval_fatou(one, 0.0).real() == doctest::Approx(0.5).epsilon(1e-15));

  const auto two = fatou_of({0.0, kPi});
  CHECK(std::abs(two.herglotz(0.0) - 2.0) < 1e-15);
  CHECK(std::abs(eval_fatou(two, 0.0) - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(eval_fatou(two, cd(0, 1))) < 1e-15);
  const cd w = eval_fatou(two, std::polar(1.0, kPi / 4));
  CHECK(std::abs(w - cd(0.8, 0.4)) < 1e-14);
  CHECK(std::abs(w) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-13));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const cd z = std::polar(std::sqrt(testing::uniform(rng)), kTwoPi * testing::uniform(rng));
    CHECK(std::abs(eval_fatou(one, z) - single_peak_oracle(z)) < 1e-13);
    CHECK(std::abs(eval_fatou(two, z) - two_peak_oracle(z)) < 1e-13);
  }
}

TEST_CASE("eval_fatou domain and peaks") {
  const auto lambda = fatou_of({0.3, 1.7, 4.0});
  for (const auto& a : lambda.peak_points()) CHECK(eval_fatou(lambda, a) == cd(1.0));
  CHECK(check_peak_values(lambda, 0.0).passed);
  CHECK_THROWS_AS(eval_fatou(lambda, cd(1.001, 0)), DomainError);
  CHECK_NOTHROW(eval_fatou(lambda, cd(1.0 + 1e-13, 0)));
  CHECK_THROWS_AS(FiniteBoundarySet(std::vector<double>{}), InvalidArgument);
}

TEST_CASE("boundary_imag and boundary_modulus") {
  const auto two = fatou_of({0.0, kPi});
  const Angle q = normalize_angle(kPi / 4);
  // cot(pi/8) + cot(-3pi/8) = 2, and F(e^{i pi/4}) = 2i directly.
  CHECK(boundary_imag(two, q) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(two.herglotz(q.point()).imag() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(boundary_modulus(two, q) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(boundary_modulus(two, q) == doctest::Approx(std::abs(eval_fatou(two, q.point()))));

  const auto one = fatou_of({0.0});
  CHECK(std::abs(boundary_imag(one, normalize_angle(kPi))) < 1e-15);
  CHECK(boundary_modulus(one, normalize_angle(kPi)) < 1e-15);
  for (double t : {0.1, 0.7, 2.0, 3.0}) {
    CHECK(boundary_imag(one, normalize_angle(t)) ==
          doctest::Approx(-boundary_imag(one, normalize_angle(-t))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(boundary_imag(one, normalize_angle(0.0)), SingularityError);
  CHECK_THROWS_AS(boundary_modulus(two, normalize_angle(kPi)), SingularityError);

  // Identity against direct evaluation on random sets.
  std::mt19937_64 rng(2);
  for (int s = 0; s < 20; ++s) {
    const auto lambda = fatou_of(testing::random_angles(rng, 1 + s % 9));
    for (int i = 0; i < 500; ++i) {
      const Angle t = normalize_angle(kTwoPi * (i + 0.5) / 500.0);
      bool near = false;
      for (Angle p : lambda.peaks().points()) near = near || angular_distance(p, t) < 1e-6;
      if (near) continue;
      CHECK(std::abs(boundary_modulus(lambda, t) - std::abs(eval_fatou(lambda, t.point()))) <
            1e-10);
      CHECK(std::abs(lambda.herglotz(t.point()).real()) < 1e-9 * (1 + std::abs(boundary_imag(lambda, t))));
    }
  }
}

TEST_CASE("sup_off_arc") {
  const auto one = fatou_of({0.0});
  const Arc half(normalize_angle(0.0), kPi / 2);
  const double rho = sup_off_arc(one, half, 4096, 1e-6);
  // |lambda(e^{it})| = |cos(t/2)|, largest on |t| >= pi/2 at the endpoints.
  CHECK(rho == doctest::Approx(std::sqrt(0.5) * (1 + 1e-6)).epsilon(1e-13));
  CHECK(rho < 1.0);

  // Nested arcs: a larger excluded arc never raises the estimate.
  double prev = 1.0;
  for (double hw : {0.2, 0.4, 0.8, 1.6, 3.0}) {
    const double r = sup_off_arc(one, Arc(normalize_angle(0.0), hw), 4096, 1e-12);
    CHECK(r <= prev);
    CHECK(r == doctest::Approx(std::cos(hw / 2)).epsilon(1e-11));
    prev = r;
  }

  CHECK_THROWS_AS(sup_off_arc(one, Arc(normalize_angle(1.0), 0.5), 4096, 1e-6), InvalidArgument);
  CHECK_THROWS_AS(sup_off_arc(one, half, 1000, 1e-6), InvalidArgument);
  CHECK_THROWS_AS(sup_off_arc(one, half, 4096, 0.0), InvalidArgument);
  CHECK_THROWS_AS(sup_off_arc(one, Arc(normalize_angle(0.0), 0.1), 4096, 0.01),
                  NoContractionError);
}

TEST_CASE("sup_off_arc attains the endpoint maximum") {
  // Off the arc y is monotone, so a 4096 grid matches a 2^20 grid.
  std::mt19937_64 rng(3);
  for (int s = 0; s < 10; ++s) {
    const double c = kTwoPi * testing::uniform(rng);
    std::vector<double> peaks;
    for (int i = 0; i < 4; ++i) peaks.push_back(c - 0.2 + 0.4 * testing::uniform(rng));
    const auto lambda = fatou_of(peaks);
    const Arc arc(normalize_angle(c), 0.25);
    const double coarse = sup_off_arc(lambda, arc, 4096, 1e-15);
    const double fine = sup_off_arc(lambda, arc, 1 << 20, 1e-15);
    CHECK(coarse == doctest::Approx(fine).epsilon(1e-14));
  }
}

TEST_CASE("choose_power") {
  const double r = std::sqrt(0.5);
  OffArcSup rhos{{r}, 4096, 1e-6};
  CHECK(choose_power(rhos, 0.01, 1) == 14);
  CHECK(brute_power(r, 0.01) == 14);
  CHECK(std::pow(r, 13) >= 0.01);
  CHECK(std::pow(r, 14) < 0.01);

  CHECK(choose_power(OffArcSup{{0.5}, 4096, 1e-6}, 0.6, 1) == 1);
  CHECK(choose_power(OffArcSup{{0.5}, 4096, 1e-6}, 1.2, 2) == 1);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    OffArcSup s;
    const auto k = 1 + static_cast<std::size_t>(5 * testing::uniform(rng));
    for (std::size_t j = 0; j < k; ++j) s.per_cluster.push_back(0.01 + 0.989 * testing::uniform(rng));
    const double eps = std::pow(10.0, -6 * testing::uniform(rng));
    const auto n = choose_power(s, eps, k);
    const double target = eps / static_cast<double>(k);
    CHECK(n == brute_power(s.max(), target));
    for (double rho : s.per_cluster) CHECK(std::pow(rho, static_cast<double>(n)) < target);
    if (n > 1) CHECK(std::pow(s.max(), static_cast<double>(n - 1)) >= target);
  }
  CHECK_THROWS_AS(choose_power(rhos, 0.0, 1), InvalidArgument);
  CHECK_THROWS_AS(choose_power(rhos, 0.1, 0), InvalidArgument);
}

TEST_CASE("int_power") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const cd z = std::polar(testing::uniform(rng), kTwoPi * testing::uniform(rng));
    const auto n = static_cast<std::int64_t>(1 + 60 * testing::uniform(rng));
    cd naive = 1.0;
    for (std::int64_t k = 0; k < n; ++k) naive *= z;
    CHECK(std::abs(int_power(z, n) - naive) <= 1e-13);
  }
  CHECK(int_power(cd(1.0), 1'000'000'000'000LL) == cd(1.0));
  CHECK(int_power(cd(0.5), 5000) == cd(0.0));
  CHECK(int_power(cd(0.3, 0.4), 0) == cd(1.0));
}

TEST_CASE("FatouFunction::power") {
  const auto lambda = fatou_of({0.2, 0.25, 3.0});
  std::mt19937_64 rng(15);
  for (int i = 0; i < 500; ++i) {
    const cd z = std::polar(std::sqrt(testing::uniform(rng)), kTwoPi * testing::uniform(rng));
    for (std::int64_t n : {1, 2, 5, 33}) {
      CHECK(std::abs(lambda.power(z, n) - int_power(lambda(z), n)) < 1e-13);
    }
  }
  for (const auto& a : lambda.peak_points()) CHECK(lambda.power(a, 123456789) == cd(1.0));
  CHECK(lambda.power(cd(0.1, 0.1), 0) == cd(1.0));
  CHECK_THROWS_AS((void)lambda.power(cd(2.0, 0), 3), DomainError);

  // Near a peak the log form keeps accuracy where squaring drifts: compare
  // against a long-double reference of exp(-n log(1 + 1/F)).
  const std::int64_t n = 400000;
  for (double d : {1e-4, 3e-4, 1e-3}) {
    const cd z = std::polar(1.0, 0.2 + d);
    const auto f = lambda.herglotz(z);
    const std::complex<long double> w = 1.0L / std::complex<long double>(f);
    const auto ref = std::exp(-static_cast<long double>(n) * std::log(1.0L + w));
    const cd refd(static_cast<double>(ref.real()), static_cast<double>(ref.imag()));
    CHECK(std::abs(lambda.power(z, n) - refd) < 1e-12);
  }
}

TEST_CASE("Angle::point conjugates under mirroring") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 1000; ++i) {
    const double t = kPi + kPi * testing::uniform(rng);
    const Angle a = normalize_angle(t);
    const Angle m = normalize_angle(kTwoPi - t);
    CHECK(m.point() == std::conj(a.point()));
    CHECK(std::abs(a.point() - std::polar(1.0, t)) < 1e-15);
  }
}

TEST_CASE("peak function properties") {
  std::mt19937_64 rng(6);
  for (int s = 0; s < 10; ++s) {
    const auto thetas = testing::random_angles(rng, 1 + s * 2);
    const auto lambda = fatou_of(thetas);

    // Strict contraction on the circle, away from the peaks.
    for (int i = 0; i < 20000; ++i) {
      const Angle t = normalize_angle(kTwoPi * testing::uniform(rng));
      bool near = false;
      for (Angle p : lambda.peaks().points()) near = near || angular_distance(p, t) < 1e-9;
      if (!near) CHECK(std::abs(lambda(t.point())) < 1.0);
    }

    for (const auto& z : interior_samples(2000, 1.0 - 1e-9, 100 + s)) {
      const cd l = lambda(z);
      CHECK(std::abs(l) < 1.0);
      // Re F > 0 inside, with F recovered from lambda.
      CHECK((l / (1.0 - l)).real() > 0.0);
      // |lambda^{N+1}| <= |lambda^N|.
      for (std::int64_t n : {1, 7, 100}) {
        CHECK(std::abs(int_power(l, n + 1)) <= std::abs(int_power(l, n)));
      }
    }

    // Radial limit towards each peak.
    for (const auto& a : lambda.peak_points()) {
      double prev = 2.0;
      for (int k = 2; k <= 8; ++k) {
        const double gap = std::abs(lambda(a * (1.0 - std::pow(10.0, -k))) - 1.0);
        CHECK(gap < prev);
        prev = gap;
      }
      CHECK(prev < 1e-6);
    }

    // Rotation equivariance: lambda_rot(e^{i phi} z) = lambda(z).
    const double phi = kTwoPi * testing::uniform(rng);
    std::vector<double> rotated;
    for (double t : thetas) rotated.push_back(t + phi);
    const auto lr = fatou_of(rotated);
    for (const auto& z : interior_samples(500, 0.999, 200 + s)) {
      CHECK(std::abs(lr(std::polar(1.0, phi) * z) - lambda(z)) < 1e-12);
    }
  }
}
