#include "diskinterp/fatou.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskinterp/error.hpp"
#include "diskinterp/kernels.hpp"

namespace diskinterp {

FatouFunction::FatouFunction(FiniteBoundarySet peaks) : peaks_(std::move(peaks)) {
  points_.reserve(peaks_.size());
  for (Angle a : peaks_.points()) points_.push_back(a.point());
}

std::complex<double> FatouFunction::herglotz(std::complex<double> z) const noexcept {
  std::complex<double> f{};
  for (const auto& a : points_) f += (a + z) / (a - z);
  return f;
}

std::complex<double> FatouFunction::operator()(std::complex<double> z) const {
  if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
    throw DomainError("evaluation point outside the closed unit disk");
  }
  for (const auto& a : points_) {
    if (std::abs(z - a) <= kPeakSnap) return 1.0;
  }
  // 1 - 1/(1+F) stays accurate as |F| grows near a peak.
  return 1.0 - 1.0 / (1.0 + herglotz(z));
}

std::complex<double> FatouFunction::power(std::complex<double> z, std::int64_t n) const {
  if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
    throw DomainError("evaluation point outside the closed unit disk");
  }
  if (n == 0) return 1.0;
  for (const auto& a : points_) {
    if (std::abs(z - a) <= kPeakSnap) return 1.0;
  }
  const auto f = herglotz(z);
  if (f == 0.0) return 0.0;
  const auto w = 1.0 / f;
  // log|lambda| = -log|1 + w|, arg lambda = -arg(1 + w).
  const double log_mod = -0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  const double scaled = static_cast<double>(n) * log_mod;
  if (scaled < -745.0) return 0.0;
  const double phase = -std::atan2(w.imag(), 1.0 + w.real());
  return std::polar(std::exp(scaled), static_cast<double>(n) * phase);
}

FatouFunction build_fatou(FiniteBoundarySet peaks) { return FatouFunction(std::move(peaks)); }

std::complex<double> eval_fatou(const FatouFunction& lambda, std::complex<double> z) {
  return lambda(z);
}

namespace {

double imag_trace(std::span<const Angle> peaks, double theta) {
  double y = 0.0;
  for (Angle p : peaks) {
    const double d = std::remainder(theta - p.radians(), kTwoPi);
    y += 1.0 / std::tan(0.5 * d);
  }
  return y;
}

double modulus_from_imag(double y) {
  const double a = std::abs(y);
  // |y| / sqrt(1 + y^2), written to avoid overflow for huge |y|.
  return a > 1.0 ? 1.0 / std::sqrt(1.0 + 1.0 / (a * a)) : a / std::sqrt(1.0 + a * a);
}

}  // namespace

double boundary_imag(const FatouFunction& lambda, Angle theta) {
  for (Angle p : lambda.peaks().points()) {
    if (angular_distance(p, theta) <= kPeakSnap) {
      throw SingularityError("boundary trace evaluated at a peak");
    }
  }
  return imag_trace(lambda.peaks().points(), theta.radians());
}

double boundary_modulus(const FatouFunction& lambda, Angle theta) {
  return modulus_from_imag(boundary_imag(lambda, theta));
}

double OffArcSup::max() const noexcept {
  return per_cluster.empty() ? 0.0 : *std::max_element(per_cluster.begin(), per_cluster.end());
}

double sup_off_arc(const FatouFunction& lambda, const Arc& excluded, std::size_t grid_size,
                   double safety_margin) {
  if (grid_size < 4096) throw InvalidArgument("off-arc grid needs at least 4096 points");
  if (!(safety_margin > 0.0)) throw InvalidArgument("safety margin must be positive");
  for (Angle p : lambda.peaks().points()) {
    if (!excluded.contains(p)) {
      throw InvalidArgument("peak at " + std::to_string(p.radians()) +
                            " lies outside the excluded arc");
    }
  }
  const double span = kTwoPi - 2.0 * excluded.half_width();
  const kernels::ThetaGrid grid{excluded.center().radians() + excluded.half_width(),
                                span / static_cast<double>(grid_size - 1), grid_size};
  const auto peaks = lambda.peaks().points();
  const double grid_max = kernels::parallel::max_over_thetas(
      grid, [peaks](double theta) { return modulus_from_imag(imag_trace(peaks, theta)); });
  const double rho = grid_max * (1.0 + safety_margin);
  if (!(rho < 1.0)) {
    throw NoContractionError("off-arc supremum estimate " + std::to_string(rho) +
                             " is not below 1");
  }
  return rho;
}

std::int64_t choose_power(const OffArcSup& rhos, double epsilon, std::size_t n_clusters) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (n_clusters == 0) throw InvalidArgument("need at least one cluster");
  const double rho = rhos.max();
  if (!(rho < 1.0) || rho < 0.0) throw InvalidArgument("off-arc suprema must lie in [0, 1)");
  const double target = epsilon / static_cast<double>(n_clusters);
  if (rho == 0.0 || target >= 1.0 || rho < target) return 1;

  const double guess = std::ceil(std::log(target) / std::log(rho));
  if (!(guess < 1e18)) throw NoContractionError("required power is out of range");
  auto n = std::max<std::int64_t>(1, static_cast<std::int64_t>(guess));
  auto pw = [rho](std::int64_t k) { return std::pow(rho, static_cast<double>(k)); };
  while (n > 1 && pw(n - 1) < target) --n;
  while (!(pw(n) < target)) ++n;
  return n;
}

std::complex<double> int_power(std::complex<double> z, std::int64_t n) {
  if (n == 0) return 1.0;
  const double r2 = std::norm(z);
  if (r2 == 1.0 && z == std::complex<double>(1.0)) return z;
  if (r2 < 1.0 && 0.5 * std::log(r2) * static_cast<double>(n) < -745.0) return 0.0;
  std::complex<double> result = 1.0;
  std::complex<double> base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

}  // namespace diskinterp
