#include "asdn/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asdn {

namespace {

double sgm(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

double phi(double alpha, double alpha_plus) {
  const double lo = sgm(-alpha_plus);
  return (sgm(alpha) - lo) / (sgm(alpha_plus) - lo);
}

double phi_prime(double alpha, double alpha_plus) {
  const double s = sgm(alpha);
  return s * (1.0 - s) / (sgm(alpha_plus) - sgm(-alpha_plus));
}

SamplerState::SamplerState(std::size_t neighborhood_size, SamplerParams p)
    : alpha(p.alpha_plus), eps2(neighborhood_size, 0.0), params(p) {}

bool decide(const SamplerState& st) { return st.alpha >= 0.0; }

double update_alpha(SamplerState& st, std::span<const double> weights,
                    std::size_t sampled_in_neighborhood, OpCount* ops) {
  double mix = 0.0;
  for (std::size_t s = 0; s < weights.size(); ++s) mix += weights[s] * st.eps2[s];
  const double drive = mix - (st.sampled ? st.params.beta : 0.0);
  const double a = st.alpha + st.params.mu_s * phi_prime(st.alpha, st.params.alpha_plus) * drive;
  st.alpha = std::clamp(a, -st.params.alpha_plus, st.params.alpha_plus);
  if (ops) *ops += charge::alpha_update(weights.size(), sampled_in_neighborhood, st.sampled);
  return st.alpha;
}

void refresh_eps(SamplerState& st, std::size_t slot, double e, bool sampled) {
  if (sampled) st.eps2[slot] = e * e;
}

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::full: return "full";
    case PolicyKind::as_sampling: return "as_sampling";
    case PolicyKind::as_censoring: return "as_censoring";
    case PolicyKind::random_sampling: return "random_sampling";
    case PolicyKind::probabilistic_transmission: return "probabilistic_transmission";
    case PolicyKind::non_cooperative: return "non_cooperative";
  }
  return "unknown";
}

PolicyKind policy_kind_from_string(const std::string& name) {
  for (PolicyKind k : {PolicyKind::full, PolicyKind::as_sampling, PolicyKind::as_censoring,
                       PolicyKind::random_sampling, PolicyKind::probabilistic_transmission,
                       PolicyKind::non_cooperative}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown policy kind '" + name + "'");
}

void PolicyConfig::validate(std::size_t node_count) const {
  switch (kind) {
    case PolicyKind::as_sampling:
    case PolicyKind::as_censoring:
      if (!(sampler.alpha_plus > 0.0)) throw std::invalid_argument("alpha_plus must be positive");
      if (!(sampler.beta > 0.0)) throw std::invalid_argument("beta must be positive");
      if (!(sampler.mu_s > 0.0)) throw std::invalid_argument("mu_s must be positive");
      break;
    case PolicyKind::random_sampling:
      if (sampled_nodes > node_count) {
        throw std::invalid_argument("sampled_nodes (" + std::to_string(sampled_nodes) +
                                    ") exceeds node count (" + std::to_string(node_count) + ")");
      }
      break;
    case PolicyKind::probabilistic_transmission:
      if (!(link_probability >= 0.0 && link_probability <= 1.0)) {
        throw std::invalid_argument("link_probability must lie in [0, 1]");
      }
      break;
    case PolicyKind::full:
    case PolicyKind::non_cooperative:
      break;
  }
}

TransmissionSet censoring_step(const Topology& topology, std::span<const std::uint8_t> sampled) {
  TransmissionSet out;
  out.transmits.assign(topology.size(), 0);
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    if (!sampled[k]) continue;
    out.transmits[k] = 1;
    out.transfers += topology.degree(k) - 1;
  }
  return out;
}

Bitmap baseline_step(const PolicyConfig& policy, Engine& eng, std::size_t node_count) {
  if (policy.kind != PolicyKind::random_sampling) return Bitmap(node_count, 1);
  policy.validate(node_count);
  Bitmap out(node_count, 0);
  std::vector<std::size_t> all(node_count);
  std::iota(all.begin(), all.end(), std::size_t{0});
  // partial Fisher-Yates
  for (std::size_t i = 0; i < policy.sampled_nodes; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, node_count - 1);
    std::swap(all[i], all[pick(eng)]);
    out[all[i]] = 1;
  }
  return out;
}

std::vector<Bitmap> draw_active_links(const Topology& topology, double probability,
                                      std::span<Engine> engines) {
  std::bernoulli_distribution on(probability);
  std::vector<Bitmap> active(topology.size());
  for (NodeIndex k = 0; k < topology.size(); ++k) {
    const auto n = topology.neighbors(k);
    active[k].assign(n.size(), 0);
    for (std::size_t s = 0; s < n.size(); ++s) {
      active[k][s] = (n[s] == k) ? 1 : static_cast<std::uint8_t>(on(engines[k]));
    }
  }
  return active;
}

}  // namespace asdn
