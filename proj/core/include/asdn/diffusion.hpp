#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "asdn/ops.hpp"

namespace asdn {

using VecView = std::span<const double>;

/// Floor applied to σ²_{jk} before inversion.
inline constexpr double kAcwVarianceFloor = 1e-12;

struct EstimatorParams {
  double mu_tilde = 0.5;  // normalized step size, 0 < μ̃ < 2
  double nu = 0.2;        // ACW forgetting factor, 0 < ν ≤ 1
  double delta = 1e-5;    // regularization of the step normalization
};

/// State of one node of an ATC diffusion NLMS network.
///
/// `sigma2` holds the ACW disagreement estimates σ²_{jk}, one per neighbor
/// in neighborhood order.
struct NodeEstimator {
  NodeEstimator(std::size_t order, std::size_t neighborhood_size, EstimatorParams params,
                double sigma2_init = 1.0);

  std::vector<double> w;    // combined estimate w_k
  std::vector<double> psi;  // intermediate estimate ψ_k
  std::vector<double> sigma2;
  EstimatorParams params;

  std::size_t order() const { return w.size(); }
};

/// e_k = d_k − u_kᵀ w_k.
double compute_error(const NodeEstimator& est, VecView u, double d, OpCount* ops = nullptr);

/// ψ_k = w_k + s̄_k μ_k u_k e_k with μ_k = μ̃_k / (δ + ‖u_k‖²). When not
/// sampled, ψ_k = w_k and nothing is charged.
void adapt(NodeEstimator& est, VecView u, double e, bool sampled, OpCount* ops = nullptr);

/// Adaptive combination weights. `neighbor_psi[s]` is ψ_j(n+1) of the
/// neighbor in slot s; `weights` (same order) receives c_{jk}(n). Must be
/// called before combine() overwrites w_k.
void acw_update(NodeEstimator& est, std::span<const VecView> neighbor_psi,
                std::span<double> weights, OpCount* ops = nullptr);

/// w_k = Σ_j c_{jk} ψ_j.
void combine(NodeEstimator& est, std::span<const VecView> neighbor_psi,
             std::span<const double> weights, OpCount* ops = nullptr);

}  // namespace asdn
