#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "asdn/network.hpp"
#include "asdn/rng.hpp"

namespace asdn {

/// How a per-node quantity (noise variance, step size) is chosen.
struct Profile {
  enum class Kind {
    uniform,         // i.i.d. U[lo, hi]
    pinned_uniform,  // U[lo, hi], then one node set to lo and another to hi
    fixed,           // explicit per-node values
  };
  Kind kind = Kind::uniform;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> values;

  static Profile uniform(double lo, double hi) { return {Kind::uniform, lo, hi, {}}; }
  static Profile pinned(double lo, double hi) { return {Kind::pinned_uniform, lo, hi, {}}; }
  static Profile fixed(std::vector<double> v) { return {Kind::fixed, 0.0, 0.0, std::move(v)}; }
};

std::string to_string(Profile::Kind kind);
Profile::Kind profile_kind_from_string(const std::string& name);

/// Draws one value per node. Throws std::invalid_argument when bounds are
/// inverted or non-positive, or when a fixed profile has the wrong length.
std::vector<double> draw_profile(const Profile& profile, std::size_t node_count, Engine& eng);

struct Environment {
  std::vector<double> w_opt;     // optimal system, length M
  std::vector<double> sigma2_v;  // measurement-noise variance per node
  std::vector<double> sigma2_u;  // input variance per node
  std::optional<std::size_t> flip_iteration;

  std::size_t order() const { return w_opt.size(); }
  std::size_t node_count() const { return sigma2_v.size(); }
  double sigma2_max() const;
  double sigma2_min() const;
  /// Throws std::invalid_argument when lengths disagree or a variance is negative.
  void validate() const;
};

/// w° ~ U[-1,1]^M; noise variances from `noise`; input variances from
/// `input` (default all ones). Deterministic in `seed`.
Environment init_environment(std::size_t order, std::size_t node_count, const Profile& noise,
                             Seed seed, const Profile& input = Profile::fixed({}));

/// Negates w° when n equals the configured flip iteration. Returns whether
/// a flip happened.
bool apply_flip(Environment& env, std::size_t n);

/// Streaming data for one node: a tapped delay line of white Gaussian input
/// and an independent Gaussian measurement-noise source.
class NodeStream {
 public:
  NodeStream(std::size_t order, Engine input, Engine noise);

  struct Sample {
    std::span<const double> regressor;  // u_k(n), newest sample first
    double reference;                   // d_k(n)
  };

  /// Shifts one new input sample into the delay line and returns
  /// d_k(n) = u_k(n)ᵀ w° + v_k(n). Always consumes one draw from each source.
  Sample advance(const Environment& env, NodeIndex k);

  std::span<const double> regressor() const { return line_; }

 private:
  std::vector<double> line_;
  Engine input_;
  Engine noise_;
  std::normal_distribution<double> input_dist_{0.0, 1.0};
  std::normal_distribution<double> noise_dist_{0.0, 1.0};
};

}  // namespace asdn
