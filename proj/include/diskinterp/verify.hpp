#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "diskinterp/circle.hpp"
#include "diskinterp/fatou.hpp"
#include "diskinterp/interpolate.hpp"

namespace diskinterp {

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::size_t grid_size = 0;  // boundary grid, samples or quadrature nodes
  double tolerance = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

  [[nodiscard]] bool overall() const noexcept;
  /// First failing check, or nullptr.
  [[nodiscard]] const CheckResult* first_failure() const noexcept;
};

/// Peak function against target 1 at its own peaks.
CheckResult check_peak_values(const FatouFunction& lambda, double tol);

/// Interpolant against the data on E; threshold is the certificate's
/// theoretical residual bound plus `tol`.
CheckResult check_peak_values(const Interpolant& g, const BoundaryData& data, double tol);

/// max |fn| over a uniform grid of `grid_size` points plus `extra_points`;
/// passes iff <= bound + tol.
CheckResult check_boundary_sup(const ComplexFunction& fn, double bound, std::size_t grid_size,
                               double tol, std::span<const std::complex<double>> extra_points = {});

/// Interior maximum over `interior_samples` seeded points with
/// |z| <= 1 - 1e-9 against the boundary grid maximum plus `tol`.
CheckResult check_max_modulus(const ComplexFunction& fn, std::size_t interior_samples,
                              std::size_t grid_size, double tol, std::uint64_t seed,
                              std::span<const std::complex<double>> extra_boundary = {});

/// Trapezoid rule for (1/2pi) \int fn(w) w / (w - z0) dt, w = r e^{it},
/// compared with fn(z0). Throws InvalidArgument unless |z0| < radius < 1
/// and quad_points >= 1024.
CheckResult check_cauchy_identity(const ComplexFunction& fn, std::complex<double> z0,
                                  double radius, std::size_t quad_points, double tol);

/// Uniform sample of the disk |z| <= max_radius from a seeded generator.
std::vector<std::complex<double>> interior_samples(std::size_t count, double max_radius,
                                                   std::uint64_t seed);

struct VerifyOptions {
  std::size_t grid_size = 1u << 16;
  std::uint64_t seed = 0;
  std::size_t interior_samples = 10000;
  std::size_t cauchy_pairs = 10;
  std::size_t quad_points = 4096;
  double sup_tol = 1e-9;
  double identity_tol = 1e-9;
  double residual_tol = 1e-12;
};

/// Seeded (z0, r) pairs with 0.3 <= r <= 0.95 and r - |z0| >= 0.1.
std::vector<std::pair<std::complex<double>, double>> cauchy_pairs(std::size_t count,
                                                                  std::uint64_t seed);

/// Full audit of a pipeline output: residual on E, boundary sup against
/// ||f||_E + eta, maximum modulus, Cauchy identities.
VerificationReport verify_interpolant(const Interpolant& g, const BoundaryData& data,
                                      const VerifyOptions& options);

}  // namespace diskinterp
