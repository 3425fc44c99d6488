#pragma once

#include <cstddef>
#include <span>

#include "asdn/network.hpp"
#include "asdn/ops.hpp"
#include "asdn/sampling.hpp"

namespace asdn {

// Steady-state predictions for adaptive sampling. None of these take the
// sampler step size μ_s: the predicted sampled-node count does not depend
// on it.

/// β ≥ σ²_max. The boundary is admitted: the sampled-node bounds still hold
/// there, with the upper bound equal to V.
bool beta_admissible(double beta, double sigma2_max);

/// Expected sampled span (θ) and idle span (θ̄) extremes over one cycle,
/// each floored at one iteration.
struct ThetaBounds {
  double theta_max;
  double theta_min;
  double theta_bar_max;
  double theta_bar_min;
};

/// Requires β ≥ σ²_max ≥ σ²_min > 0 (std::invalid_argument otherwise).
/// θ_max is +∞ at β = σ²_max.
ThetaBounds theta_bounds(double beta, double sigma2_min, double sigma2_max);

/// θ / (θ + θ̄), with θ = +∞ giving 1 and θ̄ = +∞ giving 0.
double duty_cycle_estimate(double theta, double theta_bar);

struct SampledNodeBounds {
  double lower;
  double upper;
};

/// [V σ²_min / β, V σ²_max / β]. Requires β ≥ σ²_max ≥ σ²_min > 0.
SampledNodeBounds sampled_node_bounds(std::size_t node_count, double beta, double sigma2_min,
                                      double sigma2_max);

struct SteadyStatePrediction {
  double beta;
  double sigma2_min;
  double sigma2_max;
  std::size_t node_count;
  ThetaBounds theta;
  double duty_upper;  // duty_cycle_estimate(θ_max, θ̄_min)
  double duty_lower;  // duty_cycle_estimate(θ_min, θ̄_max)
  SampledNodeBounds bounds;
};

SteadyStatePrediction predict(std::size_t node_count, double beta, double sigma2_min,
                              double sigma2_max);

/// Rows of the per-node operation-count table.
enum class CostRow {
  dnlms,          // every node adapts and combines
  as_dnlms,       // adaptive sampling, including the α update
  dnlms_partial,  // dNLMS where unsampled nodes only combine (random sampling)
};

/// Per-node multiplications and additions for one iteration.
/// `neighborhood` is |N_k| (self included), `neighborhood_sampled` is
/// Σ_{i∈N_k} s̄_i (self included).
OpCount op_cost_model(CostRow row, std::size_t order, std::size_t neighborhood,
                      bool self_sampled, std::size_t neighborhood_sampled);

CostRow cost_row_for(PolicyKind kind);

/// Network total of op_cost_model for one iteration's sampling bitmap.
/// The non-cooperative policy counts each node as its own neighborhood.
OpCount network_cost(PolicyKind kind, std::size_t order, const Topology& topology,
                     std::span<const std::uint8_t> sampled);

}  // namespace asdn
