#include "asdn/diffusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace asdn {

NodeEstimator::NodeEstimator(std::size_t order, std::size_t neighborhood_size,
                             EstimatorParams p, double sigma2_init)
    : w(order, 0.0), psi(order, 0.0), sigma2(neighborhood_size, sigma2_init), params(p) {
  if (!(p.mu_tilde > 0.0 && p.mu_tilde < 2.0)) {
    throw std::invalid_argument("normalized step size must lie in (0, 2)");
  }
  if (!(p.delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(p.nu > 0.0 && p.nu <= 1.0)) throw std::invalid_argument("nu must lie in (0, 1]");
}

double compute_error(const NodeEstimator& est, VecView u, double d, OpCount* ops) {
  const std::size_t m = est.order();
  double y = 0.0;
  for (std::size_t i = 0; i < m; ++i) y += u[i] * est.w[i];
  if (ops) *ops += charge::error(m);
  return d - y;
}

void adapt(NodeEstimator& est, VecView u, double e, bool sampled, OpCount* ops) {
  const std::size_t m = est.order();
  if (!sampled) {
    est.psi = est.w;
    return;
  }
  double energy = 0.0;
  for (std::size_t i = 0; i < m; ++i) energy += u[i] * u[i];
  const double step = est.params.mu_tilde / (est.params.delta + energy) * e;
  for (std::size_t i = 0; i < m; ++i) est.psi[i] = est.w[i] + step * u[i];
  if (ops) *ops += charge::adapt(m);
}

void acw_update(NodeEstimator& est, std::span<const VecView> neighbor_psi,
                std::span<double> weights, OpCount* ops) {
  const std::size_t m = est.order();
  const double nu = est.params.nu;
  double total = 0.0;
  for (std::size_t s = 0; s < neighbor_psi.size(); ++s) {
    const VecView psi = neighbor_psi[s];
    double dist = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double diff = psi[i] - est.w[i];
      dist += diff * diff;
    }
    est.sigma2[s] = (1.0 - nu) * est.sigma2[s] + nu * dist;
    weights[s] = 1.0 / std::max(est.sigma2[s], kAcwVarianceFloor);
    total += weights[s];
  }
  for (double& c : weights) c /= total;
  if (ops) *ops += charge::acw(m);
}

void combine(NodeEstimator& est, std::span<const VecView> neighbor_psi,
             std::span<const double> weights, OpCount* ops) {
  const std::size_t m = est.order();
  std::fill(est.w.begin(), est.w.end(), 0.0);
  for (std::size_t s = 0; s < neighbor_psi.size(); ++s) {
    const double c = weights[s];
    const VecView psi = neighbor_psi[s];
    for (std::size_t i = 0; i < m; ++i) est.w[i] += c * psi[i];
  }
  if (ops) *ops += charge::combine(m, neighbor_psi.size());
}

}  // namespace asdn
