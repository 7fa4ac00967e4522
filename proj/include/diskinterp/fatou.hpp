#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diskinterp/circle.hpp"

namespace diskinterp {

/// Points closer than this to a peak evaluate to exactly 1.
inline constexpr double kPeakSnap = 1e-15;

/// Evaluation is allowed on |z| <= 1 + kDiskSlack.
inline constexpr double kDiskSlack = 1e-12;

/// Peak function of a finite boundary set E:
///
///   F(z) = sum_j (a_j + z) / (a_j - z),   lambda(z) = F / (1 + F),
///
/// with a_j = exp(i theta_j). Re F > 0 on the open disk and F is purely
/// imaginary on the circle away from E, so |lambda| < 1 off E and lambda = 1
/// on E.
class FatouFunction {
 public:
  explicit FatouFunction(FiniteBoundarySet peaks);

  [[nodiscard]] const FiniteBoundarySet& peaks() const noexcept { return peaks_; }
  [[nodiscard]] std::span<const std::complex<double>> peak_points() const noexcept {
    return points_;
  }

  /// lambda(z). Throws DomainError outside the closed disk.
  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;

  /// lambda(z)^n as exp(-n log(1 + 1/F)). Near a peak 1/F is small and this
  /// keeps full relative accuracy where repeated squaring of lambda would
  /// lose about n ulps. Throws DomainError outside the closed disk.
  [[nodiscard]] std::complex<double> power(std::complex<double> z, std::int64_t n) const;

  /// F(z); undefined at the peaks themselves.
  [[nodiscard]] std::complex<double> herglotz(std::complex<double> z) const noexcept;

 private:
  FiniteBoundarySet peaks_;
  std::vector<std::complex<double>> points_;
};

FatouFunction build_fatou(FiniteBoundarySet peaks);

std::complex<double> eval_fatou(const FatouFunction& lambda, std::complex<double> z);

/// Im F(e^{i theta}) = sum_j cot((theta - theta_j) / 2). Throws
/// SingularityError at a peak.
double boundary_imag(const FatouFunction& lambda, Angle theta);

/// |lambda(e^{i theta})| = |y| / sqrt(1 + y^2) with y = boundary_imag.
double boundary_modulus(const FatouFunction& lambda, Angle theta);

/// Upper estimates rho_k of sup |lambda_k| off the arc I_k, one per cluster.
struct OffArcSup {
  std::vector<double> per_cluster;
  std::size_t grid_size = 0;
  double safety_margin = 0.0;

  [[nodiscard]] double max() const noexcept;
};

/// Grid maximum of boundary_modulus over the closed complement of `excluded`
/// (both endpoints included), inflated by (1 + safety_margin).
///
/// Off the arc, y(theta) is strictly decreasing between the two endpoints, so
/// the supremum sits on an endpoint and the grid attains it; the margin only
/// absorbs rounding. Throws InvalidArgument if a peak lies outside
/// `excluded`, grid_size < 4096 or safety_margin <= 0, and NoContractionError
/// if the estimate is >= 1.
double sup_off_arc(const FatouFunction& lambda, const Arc& excluded, std::size_t grid_size,
                   double safety_margin);

/// Smallest N >= 1 with rho_k^N < epsilon / n_clusters for every k.
std::int64_t choose_power(const OffArcSup& rhos, double epsilon, std::size_t n_clusters);

/// z^n by repeated squaring; values below the double range collapse to 0.
std::complex<double> int_power(std::complex<double> z, std::int64_t n);

}  // namespace diskinterp
