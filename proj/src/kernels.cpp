#include "diskinterp/kernels.hpp"

#include <numbers>

namespace diskinterp::kernels {

ThetaGrid circle_grid(std::size_t n) {
  return ThetaGrid{0.0, n == 0 ? 0.0 : 2.0 * std::numbers::pi / static_cast<double>(n), n};
}

std::vector<std::complex<double>> grid_points(const ThetaGrid& grid) {
  std::vector<std::complex<double>> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) out[i] = std::polar(1.0, grid[i]);
  return out;
}

}  // namespace diskinterp::kernels
