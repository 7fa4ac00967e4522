// Serial vs OpenMP timings for the grid sweeps the pipeline spends its time in.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "diskinterp/fatou.hpp"
#include "diskinterp/interpolate.hpp"
#include "diskinterp/kernels.hpp"
#include "diskinterp/verify.hpp"

using namespace diskinterp;

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms, double serial_value,
         double parallel_value) {
  std::printf("%-34s %10.2f %10.2f %8.2fx   |diff| = %.1e\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, std::abs(serial_value - parallel_value));
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  std::vector<double> thetas;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 12; ++i) thetas.push_back(6.283185307179586 * (rng() >> 11) * 0x1.0p-53);
  const auto lambda = build_fatou(FiniteBoundarySet(thetas));

  {
    const auto grid = kernels::circle_grid(1 << 20);
    auto fn = [&lambda](double t) { return std::abs(lambda(std::polar(1.0, t))); };
    double s = 0, p = 0;
    const double ts = best_of(3, [&] { s = kernels::serial::max_over_thetas(grid, fn); });
    const double tp = best_of(3, [&] { p = kernels::parallel::max_over_thetas(grid, fn); });
    row("max |lambda| over 2^20 thetas", ts, tp, s, p);
  }

  std::vector<std::complex<double>> values;
  for (int i = 0; i < 12; ++i) values.push_back(std::polar(1.0, 0.5 * i));
  const auto data = BoundaryData::from_pairs(thetas, values);
  const auto g = iterative_interpolant(data, 0.01, 20, 4096, 1e-12);
  {
    const auto pts = kernels::grid_points(kernels::circle_grid(1 << 16));
    double s = 0, p = 0;
    const double ts = best_of(3, [&] { s = kernels::serial::max_modulus(pts, g); });
    const double tp = best_of(3, [&] { p = kernels::parallel::max_modulus(pts, g); });
    row("max |g| over 2^16 boundary points", ts, tp, s, p);
  }
  {
    const auto nodes = kernels::grid_points(kernels::circle_grid(4096));
    auto integrand = [&g](std::complex<double> u) {
      const auto w = 0.8 * u;
      return g(w) * w / (w - 0.3);
    };
    std::complex<double> s, p;
    const double ts = best_of(5, [&] { s = kernels::serial::sum(nodes, integrand); });
    const double tp = best_of(5, [&] { p = kernels::parallel::sum(nodes, integrand); });
    row("Cauchy trapezoid, 4096 nodes", ts, tp, std::abs(s), std::abs(p));
  }
  {
    const auto inside = interior_samples(10000, 1.0 - 1e-9, 3);
    double s = 0, p = 0;
    const double ts = best_of(3, [&] { s = kernels::serial::max_modulus(inside, g); });
    const double tp = best_of(3, [&] { p = kernels::parallel::max_modulus(inside, g); });
    row("max |g| over 1e4 interior samples", ts, tp, s, p);
  }
  return 0;
}
