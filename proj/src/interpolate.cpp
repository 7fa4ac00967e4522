#include "diskinterp/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskinterp/error.hpp"
#include "diskinterp/kernels.hpp"

namespace diskinterp {

namespace {

std::vector<FatouFunction> peak_functions(const BoundaryData& data, const Clustering& clustering) {
  std::vector<FatouFunction> out;
  out.reserve(clustering.size());
  for (const auto& cluster : clustering.clusters) {
    std::vector<Angle> angles;
    angles.reserve(cluster.members.size());
    for (std::size_t i : cluster.members) angles.push_back(data.set()[i]);
    out.emplace_back(FiniteBoundarySet(std::move(angles)));
  }
  return out;
}

void check_plan(const BoundaryData& data, const StagePlan& plan) {
  const auto& clusters = plan.clustering.clusters;
  if (clusters.empty()) throw InvalidArgument("stage plan has no clusters");
  if (plan.off_arc.per_cluster.size() != clusters.size()) {
    throw InvalidArgument("stage plan needs one off-arc supremum per cluster");
  }
  if (plan.power < 1) throw InvalidArgument("stage power must be at least 1");
  if (!(plan.epsilon > 0.0)) throw InvalidArgument("stage epsilon must be positive");
  for (const auto& c : clusters) {
    if (c.members.empty()) throw InvalidArgument("empty cluster in stage plan");
    for (std::size_t i : c.members) {
      if (i >= data.size()) throw InvalidArgument("cluster member index out of range");
    }
    if (std::find(c.members.begin(), c.members.end(), c.representative) == c.members.end()) {
      throw InvalidArgument("cluster representative is not a member");
    }
  }
}

StageApproximant assemble(const BoundaryData& data, StagePlan plan,
                          std::vector<FatouFunction> lambdas) {
  StageApproximant h;
  h.plan = std::move(plan);
  h.lambdas = std::move(lambdas);
  h.input_sup_norm = data.sup_norm();
  h.normalization = 1.0 / (1.0 + h.plan.epsilon);

  const auto& clusters = h.plan.clustering.clusters;
  h.coefficients.reserve(clusters.size());
  for (const auto& c : clusters) h.coefficients.push_back(data.value(c.representative));

  // On arc k only lambda_k may be large; off every arc all terms are small.
  std::vector<double> leak(clusters.size());
  double leak_total = 0.0;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    leak[k] = std::abs(h.coefficients[k]) *
              std::pow(h.plan.off_arc.per_cluster[k], static_cast<double>(h.plan.power));
    leak_total += leak[k];
  }
  double bound = leak_total;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    bound = std::max(bound, std::abs(h.coefficients[k]) + (leak_total - leak[k]));
  }
  h.certified_sup = h.normalization * bound;

  double residual = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    residual = std::max(residual, std::abs(data.value(i) - h(data.set()[i].point())));
  }
  h.certified_residual = residual;
  return h;
}

BoundsCertificate certify(const BoundaryData& data, const Interpolant& g, std::size_t grid_size,
                          double safety_margin) {
  BoundsCertificate cert;
  cert.sup_norm_input = data.sup_norm();
  cert.eta = g.schedule.eta;
  cert.grid_size = grid_size;
  cert.safety_margin = safety_margin;

  const auto grid = kernels::grid_points(kernels::circle_grid(grid_size));
  double sup = kernels::parallel::max_modulus(grid, [&g](std::complex<double> z) { return g(z); });
  double residual = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto gz = g(data.set()[i].point());
    sup = std::max(sup, std::abs(gz));
    residual = std::max(residual, std::abs(data.value(i) - gz));
  }
  cert.measured_boundary_sup = sup;
  cert.measured_max_residual_on_E = residual;
  cert.residual_bound_theoretical =
      g.stages.empty() ? data.sup_norm() : g.schedule.tail_bound(g.stages.size());
  return cert;
}

}  // namespace

std::complex<double> StageApproximant::unnormalized(std::complex<double> z) const {
  std::complex<double> acc{};
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (coefficients[k] == 0.0) continue;
    acc += coefficients[k] * lambdas[k].power(z, plan.power);
  }
  return acc;
}

StageApproximant assemble_stage(const BoundaryData& data, StagePlan plan) {
  check_plan(data, plan);
  auto lambdas = peak_functions(data, plan.clustering);
  return assemble(data, std::move(plan), std::move(lambdas));
}

StageApproximant single_stage(const BoundaryData& data, double epsilon, std::size_t grid_size,
                              double safety_margin) {
  if (!(epsilon > 0.0)) throw InvalidArgument("stage epsilon must be positive");
  StagePlan plan;
  plan.clustering = cluster_by_oscillation(data, epsilon);
  plan.epsilon = epsilon;
  auto lambdas = peak_functions(data, plan.clustering);

  plan.off_arc.grid_size = grid_size;
  plan.off_arc.safety_margin = safety_margin;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    plan.off_arc.per_cluster.push_back(
        sup_off_arc(lambdas[k], plan.clustering.clusters[k].arc, grid_size, safety_margin));
  }
  plan.power = choose_power(plan.off_arc, epsilon, plan.clustering.size());
  return assemble(data, std::move(plan), std::move(lambdas));
}

double EtaSchedule::sum() const noexcept {
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

double EtaSchedule::tail_bound(std::size_t n) const {
  if (n == 0 || n > terms.size()) throw std::out_of_range("schedule index out of range");
  double tail = terms[n - 1];
  for (std::size_t k = n; k <= terms.size(); ++k) tail += terms[k - 1];
  return tail;
}

EtaSchedule make_schedule(double eta, std::size_t n_max) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidArgument("eta must be positive");
  if (n_max < 1) throw InvalidArgument("schedule needs at least one term");
  EtaSchedule s;
  s.eta = eta;
  s.terms.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    s.terms.push_back(std::ldexp(eta, -static_cast<int>(n + 1)));
  }
  return s;
}

std::complex<double> Interpolant::operator()(std::complex<double> z) const {
  if (!(std::abs(z) <= 1.0 + kDiskSlack)) {
    throw DomainError("evaluation point outside the closed unit disk");
  }
  std::complex<double> acc{};
  for (const auto& h : stages) acc += h(z);
  return acc;
}

std::complex<double> eval_interpolant(const Interpolant& g, std::complex<double> z) {
  return g(z);
}

BoundaryData residual_data(const BoundaryData& data, std::span<const StageApproximant> stages) {
  std::vector<std::complex<double>> values(data.values().begin(), data.values().end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto z = data.set()[i].point();
    for (const auto& h : stages) values[i] -= h(z);
  }
  return data.with_values(std::move(values));
}

Interpolant iterative_interpolant(const BoundaryData& data, double eta, std::size_t n_max,
                                  std::size_t grid_size, double safety_margin) {
  Interpolant g;
  g.schedule = make_schedule(eta, n_max);

  BoundaryData residual = data;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (residual.sup_norm() < kZeroResidual) break;
    const double eta_n = g.schedule.terms[n - 1];
    const double eps_n = eta_n / (1.0 + 2.0 * residual.sup_norm());
    StageApproximant h = single_stage(residual, eps_n, grid_size, safety_margin);

    if (h.certified_sup > residual.sup_norm() * (1.0 + 1e-12)) {
      throw CertificationError("stage " + std::to_string(n) + " sup bound " +
                               std::to_string(h.certified_sup) + " exceeds input sup norm " +
                               std::to_string(residual.sup_norm()));
    }
    if (!(h.certified_residual < eta_n)) {
      throw CertificationError("stage " + std::to_string(n) + " residual " +
                               std::to_string(h.certified_residual) + " is not below eta_n " +
                               std::to_string(eta_n));
    }
    g.stages.push_back(std::move(h));
    residual = residual_data(residual, std::span(g.stages).last(1));
  }

  g.certificate = certify(data, g, grid_size, safety_margin);
  return g;
}

Interpolant replay_interpolant(const BoundaryData& data, const EtaSchedule& schedule,
                               std::span<const StagePlan> plans, std::size_t grid_size,
                               double safety_margin) {
  Interpolant g;
  g.schedule = schedule;
  BoundaryData residual = data;
  for (const auto& plan : plans) {
    g.stages.push_back(assemble_stage(residual, plan));
    residual = residual_data(residual, std::span(g.stages).last(1));
  }
  g.certificate = certify(data, g, grid_size, safety_margin);
  return g;
}

}  // namespace diskinterp
