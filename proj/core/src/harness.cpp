#include "asdn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace asdn {

namespace {

void check_profile(const Profile& p, const char* what, double upper_exclusive = 0.0) {
  if (p.kind == Profile::Kind::fixed) {
    for (double v : p.values) {
      if (!(v > 0.0) || (upper_exclusive > 0.0 && !(v < upper_exclusive))) {
        throw ConfigError(std::string(what) + ": value out of range");
      }
    }
    return;
  }
  if (!(p.lo > 0.0) || !(p.hi > 0.0)) {
    throw ConfigError(std::string(what) + ": bounds must be positive");
  }
  if (p.lo > p.hi) throw ConfigError(std::string(what) + ": lower bound exceeds upper bound");
  if (upper_exclusive > 0.0 && !(p.hi < upper_exclusive)) {
    throw ConfigError(std::string(what) + ": upper bound must be below " +
                      std::to_string(upper_exclusive));
  }
}

}  // namespace

void RunConfig::validate() const {
  if (edge_list.empty()) {
    if (nodes == 0) throw ConfigError("topology.nodes must be >= 1");
    if (!(radius > 0.0)) throw ConfigError("topology.radius must be positive");
  }
  if (order == 0) throw ConfigError("env.order must be >= 1");
  check_profile(noise, "env.noise");
  if (!(input.kind == Profile::Kind::fixed && input.values.empty())) check_profile(input, "env.input");
  check_profile(step_size, "env.step", 2.0);
  if (!(delta > 0.0)) throw ConfigError("env.delta must be positive");
  if (!(nu > 0.0 && nu <= 1.0)) throw ConfigError("env.nu must lie in (0, 1]");
  if (iterations == 0) throw ConfigError("run.iterations must be >= 1");
  if (realizations == 0) throw ConfigError("run.realizations must be >= 1");
  if (smoothing == 0) throw ConfigError("run.smoothing must be >= 1");
  if (flip_iteration && *flip_iteration >= iterations) {
    throw ConfigError("env.flip_iteration must be below run.iterations");
  }
  try {
    // node count is only known for generated graphs; prepare() re-checks
    policy.validate(edge_list.empty() ? nodes : static_cast<std::size_t>(-1));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("policy: ") + e.what());
  }
}

Scenario prepare(const RunConfig& cfg) {
  cfg.validate();
  try {
    Topology topology = cfg.edge_list.empty()
                            ? build_random_geometric(cfg.nodes, cfg.radius, cfg.seed)
                            : load_edge_list(cfg.edge_list);
    const std::size_t v = topology.size();
    cfg.policy.validate(v);
    Environment env = init_environment(cfg.order, v, cfg.noise, cfg.seed, cfg.input);
    env.flip_iteration = cfg.flip_iteration;
    Engine eng = make_engine({cfg.seed, 1, kNetworkStream, StreamRole::environment});
    std::vector<double> steps = draw_profile(cfg.step_size, v, eng);
    return Scenario{std::move(topology), std::move(env), std::move(steps)};
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

double network_msd(std::span<const NodeEstimator> nodes, std::span<const double> w_opt) {
  double total = 0.0;
  for (const auto& node : nodes) {
    for (std::size_t i = 0; i < w_opt.size(); ++i) {
      const double d = w_opt[i] - node.w[i];
      total += d * d;
    }
  }
  return total / static_cast<double>(nodes.size());
}

std::vector<double> moving_average(std::span<const double> series, std::size_t length) {
  if (length == 0) throw std::invalid_argument("moving average length must be >= 1");
  std::vector<double> out(series.size());
  double window = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    window += series[i];
    if (i >= length) window -= series[i - length];
    const std::size_t count = std::min(i + 1, length);
    out[i] = window / static_cast<double>(count);
  }
  return out;
}

Simulator::Simulator(const Scenario& scenario, const RunConfig& cfg, std::size_t realization)
    : scenario_(scenario),
      policy_(cfg.policy),
      count_mode_(cfg.count_mode),
      env_(scenario.env),
      network_policy_(
          make_engine({cfg.seed, realization, kNetworkStream, StreamRole::policy})) {
  const Topology& topo = scenario_.topology;
  const std::size_t v = topo.size();
  const std::size_t m = env_.order();
  const bool solo = policy_.kind == PolicyKind::non_cooperative;

  const CombinationMatrix initial = cfg.initial_weights == InitialWeights::metropolis
                                        ? metropolis_weights(topo)
                                        : uniform_weights(topo);
  hood_.resize(v);
  weights_.resize(v);
  nodes_.reserve(v);
  streams_.reserve(v);
  node_policy_.reserve(v);
  for (NodeIndex k = 0; k < v; ++k) {
    if (solo) {
      hood_[k] = {k};
      weights_[k] = {1.0};
    } else {
      const auto n = topo.neighbors(k);
      hood_[k].assign(n.begin(), n.end());
      const auto c = initial.column(k);
      weights_[k].assign(c.begin(), c.end());
    }
    const std::size_t size = hood_[k].size();
    nodes_.emplace_back(m, size, EstimatorParams{scenario_.step_sizes[k], cfg.nu, cfg.delta});
    // σ²_{jk}(0) ∝ 1/c_{jk}(0), so the first ACW weights equal the initial rule
    for (std::size_t s = 0; s < size; ++s) {
      nodes_[k].sigma2[s] = 1.0 / (static_cast<double>(size) * weights_[k][s]);
    }
    streams_.emplace_back(m, make_engine({cfg.seed, realization, k, StreamRole::input}),
                          make_engine({cfg.seed, realization, k, StreamRole::noise}));
    node_policy_.push_back(make_engine({cfg.seed, realization, k, StreamRole::policy}));
    if (policy_.adaptive()) samplers_.emplace_back(size, policy_.sampler);
  }
  if (policy_.kind == PolicyKind::probabilistic_transmission) {
    link_cache_.resize(v);
    for (NodeIndex k = 0; k < v; ++k) {
      link_cache_[k].assign(hood_[k].size(), std::vector<double>(m, 0.0));
    }
  }
  sampled_.assign(v, 1);
  errors_.assign(v, 0.0);
  node_ops_.assign(v, OpCount{});
}

IterationRecord Simulator::step() {
  const Topology& topo = scenario_.topology;
  const std::size_t v = topo.size();
  const bool censoring = policy_.kind == PolicyKind::as_censoring;
  apply_flip(env_, n_);

  if (policy_.adaptive()) {
    for (NodeIndex k = 0; k < v; ++k) {
      samplers_[k].sampled = decide(samplers_[k]);
      sampled_[k] = samplers_[k].sampled ? 1 : 0;
    }
  } else {
    sampled_ = baseline_step(policy_, network_policy_, v);
  }
  std::fill(node_ops_.begin(), node_ops_.end(), OpCount{});

  // adapt phase: every ψ_k(n+1) is produced before any combine reads it
  for (NodeIndex k = 0; k < v; ++k) {
    const auto sample = streams_[k].advance(env_, k);
    NodeEstimator& node = nodes_[k];
    if (sampled_[k]) {
      errors_[k] = compute_error(node, sample.regressor, sample.reference, &node_ops_[k]);
      adapt(node, sample.regressor, errors_[k], true, &node_ops_[k]);
    } else if (!censoring) {
      adapt(node, sample.regressor, 0.0, false);
    }
  }

  // transmissions
  std::size_t transfers = 0;
  std::size_t transmitters = 0;
  switch (policy_.kind) {
    case PolicyKind::non_cooperative:
      break;
    case PolicyKind::as_censoring: {
      const TransmissionSet tx = censoring_step(topo, sampled_);
      transfers = tx.transfers;
      for (NodeIndex k = 0; k < v; ++k) {
        if (tx.transmits[k] && topo.degree(k) > 1) ++transmitters;
      }
      break;
    }
    case PolicyKind::probabilistic_transmission: {
      const auto active = draw_active_links(topo, policy_.link_probability, node_policy_);
      Bitmap sent(v, 0);
      for (NodeIndex k = 0; k < v; ++k) {
        for (std::size_t s = 0; s < hood_[k].size(); ++s) {
          const NodeIndex j = hood_[k][s];
          if (j == k || !active[k][s]) continue;
          link_cache_[k][s] = nodes_[j].psi;
          sent[j] = 1;
          ++transfers;
        }
      }
      transmitters = static_cast<std::size_t>(std::count(sent.begin(), sent.end(), 1));
      break;
    }
    default:
      transfers = topo.directed_link_count();
      for (NodeIndex k = 0; k < v; ++k) {
        if (topo.degree(k) > 1) ++transmitters;
      }
      break;
  }

  // combine phase
  const bool cached = policy_.kind == PolicyKind::probabilistic_transmission;
  for (NodeIndex k = 0; k < v; ++k) {
    views_.clear();
    for (std::size_t s = 0; s < hood_[k].size(); ++s) {
      const NodeIndex j = hood_[k][s];
      if (cached && j != k) {
        views_.emplace_back(link_cache_[k][s]);
      } else {
        views_.emplace_back(nodes_[j].psi);
      }
    }
    if (sampled_[k]) acw_update(nodes_[k], views_, weights_[k], &node_ops_[k]);
    combine(nodes_[k], views_, weights_[k], &node_ops_[k]);
  }

  if (policy_.adaptive()) {
    for (NodeIndex k = 0; k < v; ++k) {
      for (std::size_t s = 0; s < hood_[k].size(); ++s) {
        const NodeIndex i = hood_[k][s];
        refresh_eps(samplers_[k], s, errors_[i], sampled_[i] != 0);
      }
    }
    for (NodeIndex k = 0; k < v; ++k) {
      std::size_t in_hood = 0;
      for (NodeIndex i : hood_[k]) in_hood += sampled_[i];
      update_alpha(samplers_[k], weights_[k], in_hood, &node_ops_[k]);
    }
  }

  IterationRecord rec;
  rec.n = n_;
  rec.msd = network_msd(nodes_, env_.w_opt);
  rec.sampled = static_cast<std::size_t>(std::count(sampled_.begin(), sampled_.end(), 1));
  rec.communications = count_mode_ == CountMode::unicast ? transfers : transmitters;
  OpCount total;
  for (const auto& o : node_ops_) total += o;
  rec.mults = total.mults;
  rec.adds = total.adds;
  ++n_;
  return rec;
}

std::vector<IterationRecord> run_realization(const Scenario& scenario, const RunConfig& cfg,
                                             std::size_t realization,
                                             const RoundObserver& observer) {
  Simulator sim(scenario, cfg, realization);
  std::vector<IterationRecord> out;
  out.reserve(cfg.iterations);
  for (std::size_t n = 0; n < cfg.iterations; ++n) {
    out.push_back(sim.step());
    if (observer) observer(sim, out.back());
  }
  return out;
}

std::vector<AggregateRecord> aggregate(std::span<const std::vector<IterationRecord>> runs) {
  if (runs.empty()) return {};
  const std::size_t len = runs.front().size();
  std::vector<AggregateRecord> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n].n = runs.front()[n].n;
  for (const auto& run : runs) {
    if (run.size() != len) throw std::invalid_argument("aggregate: realization lengths differ");
    for (std::size_t n = 0; n < len; ++n) {
      out[n].msd += run[n].msd;
      out[n].sampled += static_cast<double>(run[n].sampled);
      out[n].communications += static_cast<double>(run[n].communications);
      out[n].mults += static_cast<double>(run[n].mults);
      out[n].adds += static_cast<double>(run[n].adds);
    }
  }
  const double r = static_cast<double>(runs.size());
  for (auto& a : out) {
    a.msd /= r;
    a.sampled /= r;
    a.communications /= r;
    a.mults /= r;
    a.adds /= r;
  }
  return out;
}

SegmentSummary summarize(std::span<const AggregateRecord> series,
                         std::span<const double> msd_db_smoothed, std::size_t segment_begin,
                         std::size_t segment_end) {
  if (segment_end > series.size() || segment_begin >= segment_end) {
    throw std::invalid_argument("summarize: empty or out-of-range segment");
  }
  const std::size_t span = segment_end - segment_begin;
  const std::size_t window = std::max<std::size_t>(1, span / 5);
  SegmentSummary s;
  s.begin = segment_end - window;
  s.end = segment_end;
  for (std::size_t n = s.begin; n < s.end; ++n) {
    s.sampled += series[n].sampled;
    s.msd_db += msd_db_smoothed[n];
    s.communications += series[n].communications;
    s.mults += series[n].mults;
    s.adds += series[n].adds;
  }
  const double w = static_cast<double>(window);
  s.sampled /= w;
  s.msd_db /= w;
  s.communications /= w;
  s.mults /= w;
  s.adds /= w;
  return s;
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

CampaignResult monte_carlo(const RunConfig& cfg) { return monte_carlo(cfg, prepare(cfg)); }

CampaignResult monte_carlo(const RunConfig& cfg, const Scenario& scenario) {
  cfg.validate();
  std::vector<std::vector<IterationRecord>> runs(cfg.realizations);
  std::size_t threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, cfg.realizations);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r = next++; r < cfg.realizations; r = next++) {
      try {
        runs[r] = run_realization(scenario, cfg, r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult result;
  result.config = cfg;
  result.scenario = scenario;
  result.series = aggregate(runs);
  runs.clear();
  result.msd_db.reserve(result.series.size());
  for (const auto& a : result.series) result.msd_db.push_back(to_db(a.msd));
  result.msd_db_smoothed = moving_average(result.msd_db, cfg.smoothing);

  const std::size_t len = result.series.size();
  const std::size_t split = cfg.flip_iteration.value_or(len);
  if (split > 0) {
    result.pre_flip = summarize(result.series, result.msd_db_smoothed, 0, split);
  }
  if (split < len) {
    result.post_flip = summarize(result.series, result.msd_db_smoothed, split, len);
  }

  const Environment& env = scenario.env;
  if (cfg.policy.adaptive() && env.sigma2_min() > 0.0 &&
      beta_admissible(cfg.policy.sampler.beta, env.sigma2_max())) {
    result.prediction = predict(scenario.topology.size(), cfg.policy.sampler.beta,
                                env.sigma2_min(), env.sigma2_max());
  }
  return result;
}

std::optional<std::size_t> first_crossing_below(std::span<const double> series, double threshold,
                                                std::size_t from) {
  bool above = false;
  for (std::size_t i = from; i < series.size(); ++i) {
    if (series[i] > threshold) {
      above = true;
    } else if (above) {
      return i;
    }
  }
  return std::nullopt;
}

}  // namespace asdn
