#include "asdn/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace asdn {

namespace {

void require_ordered(double beta, double sigma2_min, double sigma2_max) {
  if (!(sigma2_min > 0.0)) throw std::invalid_argument("sigma2_min must be positive");
  if (sigma2_min > sigma2_max) throw std::invalid_argument("sigma2_min exceeds sigma2_max");
  if (!beta_admissible(beta, sigma2_max)) {
    throw std::invalid_argument("beta must be at least sigma2_max");
  }
}

double floor_one(double x) { return x < 1.0 ? 1.0 : x; }

}  // namespace

bool beta_admissible(double beta, double sigma2_max) { return beta >= sigma2_max; }

ThetaBounds theta_bounds(double beta, double sigma2_min, double sigma2_max) {
  require_ordered(beta, sigma2_min, sigma2_max);
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double gap_max = beta - sigma2_max;
  const double gap_min = beta - sigma2_min;
  return {
      gap_max > 0.0 ? floor_one(sigma2_max / gap_max) : inf,
      gap_min > 0.0 ? floor_one(sigma2_min / gap_min) : inf,
      floor_one(gap_min / sigma2_min),
      floor_one(gap_max / sigma2_max),
  };
}

double duty_cycle_estimate(double theta, double theta_bar) {
  if (std::isinf(theta)) return 1.0;
  if (std::isinf(theta_bar)) return 0.0;
  return theta / (theta + theta_bar);
}

SampledNodeBounds sampled_node_bounds(std::size_t node_count, double beta, double sigma2_min,
                                      double sigma2_max) {
  require_ordered(beta, sigma2_min, sigma2_max);
  const double v = static_cast<double>(node_count);
  return {v * sigma2_min / beta, v * sigma2_max / beta};
}

SteadyStatePrediction predict(std::size_t node_count, double beta, double sigma2_min,
                              double sigma2_max) {
  SteadyStatePrediction p{};
  p.beta = beta;
  p.sigma2_min = sigma2_min;
  p.sigma2_max = sigma2_max;
  p.node_count = node_count;
  p.theta = theta_bounds(beta, sigma2_min, sigma2_max);
  p.duty_upper = duty_cycle_estimate(p.theta.theta_max, p.theta.theta_bar_min);
  p.duty_lower = duty_cycle_estimate(p.theta.theta_min, p.theta.theta_bar_max);
  p.bounds = sampled_node_bounds(node_count, beta, sigma2_min, sigma2_max);
  return p;
}

OpCount op_cost_model(CostRow row, std::size_t order, std::size_t neighborhood,
                      bool self_sampled, std::size_t neighborhood_sampled) {
  const std::uint64_t m = order;
  const std::uint64_t n = neighborhood;
  const std::uint64_t s = self_sampled ? 1 : 0;
  switch (row) {
    case CostRow::dnlms:
      return {m * (3 + n) + 4, m * (3 + n) + 3};
    case CostRow::as_dnlms:
      return {s * (3 * m + 4) + m * n + neighborhood_sampled + 2,
              s * (4 * m + 2) + m * n - m + n + 2};
    case CostRow::dnlms_partial:
      return {s * (3 * m + 4) + m * n, s * (4 * m + 3) + m * n - m};
  }
  throw std::invalid_argument("unknown cost row");
}

CostRow cost_row_for(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::as_sampling:
    case PolicyKind::as_censoring:
      return CostRow::as_dnlms;
    case PolicyKind::random_sampling:
      return CostRow::dnlms_partial;
    default:
      return CostRow::dnlms;
  }
}

OpCount network_cost(PolicyKind kind, std::size_t order, const Topology& topology,
                     std::span<const std::uint8_t> sampled) {
  const CostRow row = cost_row_for(kind);
  OpCount total;
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    if (kind == PolicyKind::non_cooperative) {
      total += op_cost_model(row, order, 1, sampled[k] != 0, sampled[k]);
      continue;
    }
    std::size_t in_hood = 0;
    for (NodeIndex i : topology.neighbors(k)) in_hood += sampled[i] ? 1 : 0;
    total += op_cost_model(row, order, topology.degree(k), sampled[k] != 0, in_hood);
  }
  return total;
}

}  // namespace asdn
