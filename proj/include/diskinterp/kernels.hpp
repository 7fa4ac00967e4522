#pragma once

// Data-parallel sweeps over evaluation grids. Every kernel in `parallel` has a
// plain loop twin in `serial` that the tests hold it to.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace diskinterp::kernels {

/// theta_i = start + i * step for i in [0, count).
struct ThetaGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  [[nodiscard]] double operator[](std::size_t i) const noexcept {
    return start + static_cast<double>(i) * step;
  }
};

/// Uniform grid of `n` points on the circle starting at angle 0.
ThetaGrid circle_grid(std::size_t n);

/// Unit-modulus points of a theta grid.
std::vector<std::complex<double>> grid_points(const ThetaGrid& grid);

namespace serial {

template <class Fn>
double max_over_thetas(const ThetaGrid& grid, Fn&& fn) {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.count; ++i) best = std::max(best, fn(grid[i]));
  return best;
}

template <class Fn>
double max_modulus(std::span<const std::complex<double>> points, Fn&& fn) {
  double best = 0.0;
  for (const auto& z : points) best = std::max(best, std::abs(fn(z)));
  return best;
}

template <class Fn>
void evaluate(std::span<const std::complex<double>> points, std::span<std::complex<double>> out,
              Fn&& fn) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = fn(points[i]);
}

template <class Fn>
std::complex<double> sum(std::span<const std::complex<double>> points, Fn&& fn) {
  std::complex<double> acc{};
  for (const auto& z : points) acc += fn(z);
  return acc;
}

}  // namespace serial

namespace parallel {

template <class Fn>
double max_over_thetas(const ThetaGrid& grid, Fn&& fn) {
  double best = 0.0;
  const auto n = static_cast<std::int64_t>(grid.count);
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    best = std::max(best, fn(grid[static_cast<std::size_t>(i)]));
  }
  return best;
}

template <class Fn>
double max_modulus(std::span<const std::complex<double>> points, Fn&& fn) {
  double best = 0.0;
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for reduction(max : best) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    best = std::max(best, std::abs(fn(points[static_cast<std::size_t>(i)])));
  }
  return best;
}

template <class Fn>
void evaluate(std::span<const std::complex<double>> points, std::span<std::complex<double>> out,
              Fn&& fn) {
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = fn(points[static_cast<std::size_t>(i)]);
  }
}

/// Summation order differs from the serial twin; results agree to rounding.
template <class Fn>
std::complex<double> sum(std::span<const std::complex<double>> points, Fn&& fn) {
  double re = 0.0;
  double im = 0.0;
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto v = fn(points[static_cast<std::size_t>(i)]);
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

}  // namespace parallel

}  // namespace diskinterp::kernels
