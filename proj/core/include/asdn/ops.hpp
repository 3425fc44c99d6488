#pragma once

#include <cstddef>
#include <cstdint>

namespace asdn {

/// Multiplication and addition tally.
struct OpCount {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;

  OpCount& operator+=(const OpCount& o) {
    mults += o.mults;
    adds += o.adds;
    return *this;
  }
  friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
  bool operator==(const OpCount&) const = default;
};

/// Per-stage charges applied by the diffusion and sampling code paths.
/// Summed over the stages a node executes, they reproduce the per-node
/// operation table for diffusion NLMS with adaptive combination weights:
///
///   error + adapt + acw + combine         = M(3+|N_k|)+4 mults, M(3+|N_k|)+3 adds
///   ... + alpha update (adaptive sampling) adds Σ s̄_i + 2 mults, |N_k|+2−s̄_k adds
///
/// The first three stages only run on sampled nodes. The acw charge is the
/// residual the table assigns to the weight update and is not a literal
/// count of the arithmetic in acw_update().
namespace charge {

inline OpCount error(std::size_t m) { return {m, m}; }
inline OpCount adapt(std::size_t m) { return {2 * m + 2, 2 * m}; }
inline OpCount acw(std::size_t m) { return {2, m + 3}; }
inline OpCount combine(std::size_t m, std::size_t neighborhood) {
  return {m * neighborhood, m * (neighborhood - 1)};
}
inline OpCount alpha_update(std::size_t neighborhood, std::size_t sampled_in_neighborhood,
                            bool self_sampled) {
  return {sampled_in_neighborhood + 2, neighborhood + 2 - (self_sampled ? 1u : 0u)};
}

}  // namespace charge

}  // namespace asdn
