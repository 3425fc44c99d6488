#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "asdn/network.hpp"
#include "asdn/ops.hpp"
#include "asdn/rng.hpp"

namespace asdn {

using Bitmap = std::vector<std::uint8_t>;

/// Normalized sigmoid mapping α ∈ [−α⁺, α⁺] onto [0, 1].
double phi(double alpha, double alpha_plus);
/// dφ/dα.
double phi_prime(double alpha, double alpha_plus);

struct SamplerParams {
  double alpha_plus = 4.0;
  double beta = 0.68;
  double mu_s = 0.1571;
};

/// Per-node adaptive-sampling state.
struct SamplerState {
  SamplerState(std::size_t neighborhood_size, SamplerParams params);

  double alpha;   // starts at α⁺, so every node is sampled first
  bool sampled = true;
  std::vector<double> eps2;  // latest squared error of each neighbor (neighborhood order)
  SamplerParams params;
};

/// s̄_k = 1 iff φ(α_k) ≥ 0.5, i.e. iff α_k ≥ 0.
bool decide(const SamplerState& st);

/// α_k ← clamp(α_k + μ_s φ′(α_k)[Σ_i c_{ik} ε²_i − β s̄_k], −α⁺, α⁺).
/// `weights` are node k's current combination weights in neighborhood order.
/// `sampled_in_neighborhood` only feeds the operation count.
double update_alpha(SamplerState& st, std::span<const double> weights,
                    std::size_t sampled_in_neighborhood = 0, OpCount* ops = nullptr);

/// ε²_i ← e_i² when neighbor i was sampled; unchanged otherwise.
void refresh_eps(SamplerState& st, std::size_t slot, double e, bool sampled);

enum class PolicyKind {
  full,
  as_sampling,
  as_censoring,
  random_sampling,
  probabilistic_transmission,
  non_cooperative,
};

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

struct PolicyConfig {
  PolicyKind kind = PolicyKind::full;
  SamplerParams sampler;        // as_sampling, as_censoring
  std::size_t sampled_nodes = 0;  // random_sampling: V_s
  double link_probability = 1.0;  // probabilistic_transmission: p

  bool adaptive() const {
    return kind == PolicyKind::as_sampling || kind == PolicyKind::as_censoring;
  }
  /// Throws std::invalid_argument on parameters that do not fit `node_count`.
  void validate(std::size_t node_count) const;
};

/// Which nodes transmit this round, and how many node-to-neighbor transfers.
struct TransmissionSet {
  Bitmap transmits;
  std::size_t transfers = 0;
};

/// Energy-saving variant: only sampled nodes transmit (ψ_k, ε²_k) to their
/// neighbors; the rest keep their transmitter off.
TransmissionSet censoring_step(const Topology& topology, std::span<const std::uint8_t> sampled);

/// Sampling bitmap for the non-adaptive policies. random_sampling picks
/// exactly V_s nodes uniformly; every other baseline samples all nodes.
Bitmap baseline_step(const PolicyConfig& policy, Engine& eng, std::size_t node_count);

/// Incoming-link activity for probabilistic transmission: `active[k][s]` says
/// whether the neighbor in slot s of N_k delivered this round. The self slot
/// is always active. `engines[k]` is node k's policy stream.
std::vector<Bitmap> draw_active_links(const Topology& topology, double probability,
                                      std::span<Engine> engines);

}  // namespace asdn
