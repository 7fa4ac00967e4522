#include "diskinterp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "diskinterp/error.hpp"
#include "diskinterp/kernels.hpp"

namespace diskinterp {

namespace {

// Fixed mapping from generator output to [0, 1), identical on every platform.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double boundary_max(const ComplexFunction& fn, std::size_t grid_size,
                    std::span<const std::complex<double>> extra) {
  const auto grid = kernels::grid_points(kernels::circle_grid(grid_size));
  double best = kernels::parallel::max_modulus(grid, fn);
  for (const auto& z : extra) best = std::max(best, std::abs(fn(z)));
  return best;
}

std::vector<std::complex<double>> points_of(const FiniteBoundarySet& set) {
  std::vector<std::complex<double>> out;
  out.reserve(set.size());
  for (Angle a : set.points()) out.push_back(a.point());
  return out;
}

}  // namespace

bool VerificationReport::overall() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* VerificationReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

CheckResult check_peak_values(const FatouFunction& lambda, double tol) {
  double worst = 0.0;
  for (const auto& a : lambda.peak_points()) worst = std::max(worst, std::abs(lambda(a) - 1.0));
  return {"peak_values", worst <= tol, worst, tol, lambda.peaks().size(), tol, 0};
}

CheckResult check_peak_values(const Interpolant& g, const BoundaryData& data, double tol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    worst = std::max(worst, std::abs(g(data.set()[i].point()) - data.value(i)));
  }
  const double threshold = g.certificate.residual_bound_theoretical + tol;
  return {"peak_values", worst <= threshold, worst, threshold, data.size(), tol, 0};
}

CheckResult check_boundary_sup(const ComplexFunction& fn, double bound, std::size_t grid_size,
                               double tol, std::span<const std::complex<double>> extra_points) {
  const double measured = boundary_max(fn, grid_size, extra_points);
  return {"boundary_sup", measured <= bound + tol, measured, bound + tol, grid_size, tol, 0};
}

std::vector<std::complex<double>> interior_samples(std::size_t count, double max_radius,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::complex<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = max_radius * std::sqrt(unit_uniform(rng));
    const double t = kTwoPi * unit_uniform(rng);
    out.push_back(std::polar(r, t));
  }
  return out;
}

CheckResult check_max_modulus(const ComplexFunction& fn, std::size_t interior_count,
                              std::size_t grid_size, double tol, std::uint64_t seed,
                              std::span<const std::complex<double>> extra_boundary) {
  const auto inside = interior_samples(interior_count, 1.0 - 1e-9, seed);
  const double interior = kernels::parallel::max_modulus(inside, fn);
  const double boundary = boundary_max(fn, grid_size, extra_boundary);
  return {"max_modulus", interior <= boundary + tol, interior, boundary + tol, grid_size, tol,
          seed};
}

CheckResult check_cauchy_identity(const ComplexFunction& fn, std::complex<double> z0,
                                  double radius, std::size_t quad_points, double tol) {
  if (!(std::abs(z0) < radius && radius < 1.0)) {
    throw InvalidArgument("Cauchy check needs |z0| < radius < 1");
  }
  if (quad_points < 1024) throw InvalidArgument("Cauchy check needs at least 1024 nodes");
  const auto nodes = kernels::grid_points(kernels::circle_grid(quad_points));
  const auto total = kernels::parallel::sum(nodes, [&](std::complex<double> u) {
    const auto w = radius * u;
    return fn(w) * w / (w - z0);
  });
  const auto mean = total / static_cast<double>(quad_points);
  const double diff = std::abs(mean - fn(z0));
  return {"cauchy_identity", diff <= tol, diff, tol, quad_points, tol, 0};
}

std::vector<std::pair<std::complex<double>, double>> cauchy_pairs(std::size_t count,
                                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<std::complex<double>, double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = 0.3 + 0.65 * unit_uniform(rng);
    const double rho = (r - 0.1) * std::sqrt(unit_uniform(rng));
    const double t = kTwoPi * unit_uniform(rng);
    out.emplace_back(std::polar(rho, t), r);
  }
  return out;
}

VerificationReport verify_interpolant(const Interpolant& g, const BoundaryData& data,
                                      const VerifyOptions& options) {
  const ComplexFunction fn = [&g](std::complex<double> z) { return g(z); };
  const auto on_e = points_of(data.set());

  VerificationReport report;
  report.checks.push_back(check_peak_values(g, data, options.residual_tol));
  report.checks.push_back(check_boundary_sup(fn, data.sup_norm() + g.schedule.eta,
                                             options.grid_size, options.sup_tol, on_e));
  report.checks.push_back(check_max_modulus(fn, options.interior_samples, options.grid_size,
                                            options.sup_tol, options.seed, on_e));
  std::size_t i = 0;
  for (const auto& [z0, r] : cauchy_pairs(options.cauchy_pairs, options.seed)) {
    auto c = check_cauchy_identity(fn, z0, r, options.quad_points, options.identity_tol);
    c.name += "_" + std::to_string(i++);
    c.seed = options.seed;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace diskinterp
