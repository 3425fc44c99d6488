#include "asdn/signals.hpp"

#include <algorithm>
#include <cmath>

namespace asdn {

std::string to_string(Profile::Kind kind) {
  switch (kind) {
    case Profile::Kind::uniform: return "uniform";
    case Profile::Kind::pinned_uniform: return "pinned_uniform";
    case Profile::Kind::fixed: return "fixed";
  }
  return "unknown";
}

Profile::Kind profile_kind_from_string(const std::string& name) {
  if (name == "uniform") return Profile::Kind::uniform;
  if (name == "pinned_uniform") return Profile::Kind::pinned_uniform;
  if (name == "fixed") return Profile::Kind::fixed;
  throw std::invalid_argument("unknown profile kind '" + name + "'");
}

std::vector<double> draw_profile(const Profile& profile, std::size_t node_count, Engine& eng) {
  if (profile.kind == Profile::Kind::fixed) {
    if (profile.values.size() != node_count) {
      throw std::invalid_argument("fixed profile has " + std::to_string(profile.values.size()) +
                                  " values for " + std::to_string(node_count) + " nodes");
    }
    return profile.values;
  }
  if (!(profile.lo > 0.0) || !(profile.hi > 0.0)) {
    throw std::invalid_argument("profile bounds must be positive");
  }
  if (profile.lo > profile.hi) throw std::invalid_argument("profile lower bound exceeds upper");

  std::uniform_real_distribution<double> dist(profile.lo, profile.hi);
  std::vector<double> out(node_count);
  for (auto& v : out) v = dist(eng);
  if (profile.kind == Profile::Kind::pinned_uniform && node_count >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, node_count - 1);
    const std::size_t lo_node = pick(eng);
    std::size_t hi_node = pick(eng);
    while (hi_node == lo_node) hi_node = pick(eng);
    out[lo_node] = profile.lo;
    out[hi_node] = profile.hi;
  }
  return out;
}

double Environment::sigma2_max() const {
  return *std::max_element(sigma2_v.begin(), sigma2_v.end());
}

double Environment::sigma2_min() const {
  return *std::min_element(sigma2_v.begin(), sigma2_v.end());
}

void Environment::validate() const {
  if (w_opt.empty()) throw std::invalid_argument("environment: filter order must be >= 1");
  if (sigma2_v.empty()) throw std::invalid_argument("environment: no nodes");
  if (sigma2_u.size() != sigma2_v.size()) {
    throw std::invalid_argument("environment: input/noise variance lengths differ");
  }
  for (double v : sigma2_v) {
    if (!(v >= 0.0)) throw std::invalid_argument("environment: negative noise variance");
  }
  for (double v : sigma2_u) {
    if (!(v >= 0.0)) throw std::invalid_argument("environment: negative input variance");
  }
}

Environment init_environment(std::size_t order, std::size_t node_count, const Profile& noise,
                             Seed seed, const Profile& input) {
  if (order == 0) throw std::invalid_argument("filter order must be >= 1");
  if (node_count == 0) throw std::invalid_argument("node count must be >= 1");
  Engine eng = make_engine({seed, 0, kNetworkStream, StreamRole::environment});
  Environment env;
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  env.w_opt.resize(order);
  for (auto& w : env.w_opt) w = coeff(eng);
  env.sigma2_v = draw_profile(noise, node_count, eng);
  if (input.kind == Profile::Kind::fixed && input.values.empty()) {
    env.sigma2_u.assign(node_count, 1.0);
  } else {
    env.sigma2_u = draw_profile(input, node_count, eng);
  }
  env.validate();
  return env;
}

bool apply_flip(Environment& env, std::size_t n) {
  if (!env.flip_iteration || *env.flip_iteration != n) return false;
  for (auto& w : env.w_opt) w = -w;
  return true;
}

NodeStream::NodeStream(std::size_t order, Engine input, Engine noise)
    : line_(order, 0.0), input_(std::move(input)), noise_(std::move(noise)) {}

NodeStream::Sample NodeStream::advance(const Environment& env, NodeIndex k) {
  const double u = std::sqrt(env.sigma2_u[k]) * input_dist_(input_);
  const double v = std::sqrt(env.sigma2_v[k]) * noise_dist_(noise_);
  std::shift_right(line_.begin(), line_.end(), 1);
  line_[0] = u;
  double d = 0.0;
  for (std::size_t i = 0; i < line_.size(); ++i) d += line_[i] * env.w_opt[i];
  return {line_, d + v};
}

}  // namespace asdn
