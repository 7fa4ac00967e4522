#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diskinterp/circle.hpp"
#include "diskinterp/fatou.hpp"

namespace diskinterp {

/// Residual data below this sup norm counts as zero and ends the series.
inline constexpr double kZeroResidual = 1e-15;

/// Everything that fixes the shape of one stage independently of the data
/// coefficients: the clustering, the off-arc suprema, the power and epsilon.
struct StagePlan {
  Clustering clustering;
  OffArcSup off_arc;
  std::int64_t power = 1;
  double epsilon = 0.0;
};

/// One stage h(z) = c * sum_k f(t_k) lambda_k(z)^N with c = 1 / (1 + epsilon).
struct StageApproximant {
  StagePlan plan;
  std::vector<std::complex<double>> coefficients;  // f(t_k)
  std::vector<FatouFunction> lambdas;              // lambda_k peaks on cluster k
  double normalization = 1.0;
  double input_sup_norm = 0.0;
  /// c * max_k (|f(t_k)| + sum_{j != k} |f(t_j)| rho_j^N): bounds |h| on the circle.
  double certified_sup = 0.0;
  /// max over E of |f - h|, evaluated exactly at the points of E.
  double certified_residual = 0.0;

  [[nodiscard]] const Clustering& clustering() const noexcept { return plan.clustering; }
  [[nodiscard]] std::int64_t power() const noexcept { return plan.power; }
  [[nodiscard]] double epsilon() const noexcept { return plan.epsilon; }

  /// Normalized value h(z).
  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const {
    return normalization * unnormalized(z);
  }
  /// sum_k f(t_k) lambda_k(z)^N, before the 1/(1+epsilon) factor.
  [[nodiscard]] std::complex<double> unnormalized(std::complex<double> z) const;
};

/// Builds h for `data` from a fixed plan. The plan's clustering must index
/// into data's set.
StageApproximant assemble_stage(const BoundaryData& data, StagePlan plan);

/// Clusters, builds one peak function per cluster, estimates the off-arc
/// suprema, picks the power and assembles h. Throws InvalidArgument for
/// epsilon <= 0 and propagates NoContractionError.
StageApproximant single_stage(const BoundaryData& data, double epsilon, std::size_t grid_size,
                              double safety_margin);

/// Positive weights eta_1..eta_{n_max} with sum strictly below eta.
struct EtaSchedule {
  double eta = 0.0;
  std::vector<double> terms;

  [[nodiscard]] double sum() const noexcept;
  /// eta_n + sum_{k=n}^{n_max} eta_k for 1-based n.
  [[nodiscard]] double tail_bound(std::size_t n) const;
};

/// eta_n = eta / 2^{n+1}.
EtaSchedule make_schedule(double eta, std::size_t n_max);

struct BoundsCertificate {
  double sup_norm_input = 0.0;
  double eta = 0.0;
  std::size_t grid_size = 0;
  double measured_boundary_sup = 0.0;
  double residual_bound_theoretical = 0.0;
  double measured_max_residual_on_E = 0.0;
  double safety_margin = 0.0;

  friend bool operator==(const BoundsCertificate&, const BoundsCertificate&) = default;
};

/// Truncated correction series g = H_1 + ... + H_L.
struct Interpolant {
  std::vector<StageApproximant> stages;
  EtaSchedule schedule;
  BoundsCertificate certificate;

  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;
};

std::complex<double> eval_interpolant(const Interpolant& g, std::complex<double> z);

/// f - sum of stages, on the points of data's set.
BoundaryData residual_data(const BoundaryData& data, std::span<const StageApproximant> stages);

/// Stage n approximates f_{n-1} = f - H_1 - ... - H_{n-1} with
/// epsilon_n = eta_n / (1 + 2 ||f_{n-1}||_E), so |f_{n-1} - H_n| < eta_n on E
/// and |H_n| <= ||f_{n-1}||_E on the circle. Throws CertificationError when a
/// stage misses either bound.
Interpolant iterative_interpolant(const BoundaryData& data, double eta, std::size_t n_max,
                                  std::size_t grid_size, double safety_margin);

/// Same series, with every stage's plan fixed in advance instead of derived
/// from the residuals. Only the coefficients follow the data.
Interpolant replay_interpolant(const BoundaryData& data, const EtaSchedule& schedule,
                               std::span<const StagePlan> plans, std::size_t grid_size,
                               double safety_margin);

}  // namespace diskinterp
