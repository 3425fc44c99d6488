#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asdn/analysis.hpp"
#include "asdn/diffusion.hpp"
#include "asdn/network.hpp"
#include "asdn/ops.hpp"
#include "asdn/rng.hpp"
#include "asdn/sampling.hpp"
#include "asdn/signals.hpp"

namespace asdn {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CountMode {
  unicast,    // one unit per node-to-neighbor transfer
  broadcast,  // one unit per transmitting node
};

enum class InitialWeights { uniform, metropolis };

struct RunConfig {
  std::string name = "run";

  // topology
  std::size_t nodes = 20;
  double radius = 0.35;
  std::string edge_list;  // when set, overrides the random geometric graph
  InitialWeights initial_weights = InitialWeights::uniform;

  // environment
  std::size_t order = 50;
  Profile noise = Profile::pinned(0.1, 0.4);
  Profile input = Profile::fixed({});  // empty: unit variance everywhere
  Profile step_size = Profile::uniform(0.2, 1.0);
  std::optional<std::size_t> flip_iteration;
  double delta = 1e-5;
  double nu = 0.2;

  PolicyConfig policy;

  // run
  std::size_t iterations = 20000;
  std::size_t realizations = 100;
  Seed seed = 1;
  std::string output_dir = "out";
  CountMode count_mode = CountMode::unicast;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t smoothing = 64;

  /// Throws ConfigError. Topology-dependent checks happen in prepare().
  void validate() const;
};

/// Realization-independent part of an experiment: the graph and the drawn
/// per-node profiles.
struct Scenario {
  Topology topology;
  Environment env;
  std::vector<double> step_sizes;
};

/// Builds the scenario from the config seed. Throws ConfigError on any
/// invalid combination (including topology construction failures).
Scenario prepare(const RunConfig& cfg);

struct IterationRecord {
  std::size_t n = 0;
  double msd = 0.0;  // linear
  std::size_t sampled = 0;
  std::size_t communications = 0;
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
};

/// (1/V) Σ_k ‖w° − w_k‖².
double network_msd(std::span<const NodeEstimator> nodes, std::span<const double> w_opt);

/// Causal length-L running mean; the first L−1 outputs average the
/// available prefix.
std::vector<double> moving_average(std::span<const double> series, std::size_t length = 64);

/// One realization of the synchronous round loop. Each call to step() runs
/// decide → adapt → transmit → ACW → combine → refresh ε² → update α.
class Simulator {
 public:
  Simulator(const Scenario& scenario, const RunConfig& cfg, std::size_t realization);

  IterationRecord step();

  std::size_t iteration() const { return n_; }
  const Environment& environment() const { return env_; }
  std::span<const NodeEstimator> nodes() const { return nodes_; }
  std::span<const SamplerState> samplers() const { return samplers_; }
  /// Sampling decisions of the last completed round.
  const Bitmap& sampled() const { return sampled_; }
  /// Combination weights node k uses, in neighborhood order.
  std::span<const double> weights(NodeIndex k) const { return weights_.at(k); }
  /// Per-node operation counts of the last completed round.
  std::span<const OpCount> node_ops() const { return node_ops_; }

 private:
  const Scenario& scenario_;
  PolicyConfig policy_;
  CountMode count_mode_;
  Environment env_;
  std::size_t n_ = 0;

  std::vector<std::vector<NodeIndex>> hood_;  // effective neighborhoods
  std::vector<NodeEstimator> nodes_;
  std::vector<SamplerState> samplers_;
  std::vector<NodeStream> streams_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<std::vector<double>>> link_cache_;  // probabilistic transmission
  Engine network_policy_;
  std::vector<Engine> node_policy_;

  Bitmap sampled_;
  std::vector<double> errors_;
  std::vector<OpCount> node_ops_;
  std::vector<VecView> views_;
};

/// Runs cfg.iterations rounds. `observer`, when given, sees every round.
using RoundObserver = std::function<void(const Simulator&, const IterationRecord&)>;
std::vector<IterationRecord> run_realization(const Scenario& scenario, const RunConfig& cfg,
                                             std::size_t realization,
                                             const RoundObserver& observer = {});

/// Realization-averaged metrics for one iteration.
struct AggregateRecord {
  std::size_t n = 0;
  double msd = 0.0;
  double sampled = 0.0;
  double communications = 0.0;
  double mults = 0.0;
  double adds = 0.0;
};

/// Element-wise mean across realizations, summed in the given order.
std::vector<AggregateRecord> aggregate(std::span<const std::vector<IterationRecord>> runs);

struct SegmentSummary {
  std::size_t begin = 0;  // steady-state window [begin, end)
  std::size_t end = 0;
  double sampled = 0.0;
  double msd_db = 0.0;  // mean of the smoothed dB curve over the window
  double communications = 0.0;
  double mults = 0.0;
  double adds = 0.0;
};

/// Averages the final 20% of [segment_begin, segment_end).
SegmentSummary summarize(std::span<const AggregateRecord> series,
                         std::span<const double> msd_db_smoothed, std::size_t segment_begin,
                         std::size_t segment_end);

struct CampaignResult {
  RunConfig config;
  Scenario scenario;
  std::vector<AggregateRecord> series;
  std::vector<double> msd_db;
  std::vector<double> msd_db_smoothed;
  SegmentSummary pre_flip;               // whole run when there is no flip
  std::optional<SegmentSummary> post_flip;
  std::optional<SteadyStatePrediction> prediction;  // adaptive policies with admissible β
};

/// Runs cfg.realizations realizations (concurrently when cfg.threads allows)
/// and aggregates them. Output is independent of the thread count.
CampaignResult monte_carlo(const RunConfig& cfg);
CampaignResult monte_carlo(const RunConfig& cfg, const Scenario& scenario);

/// First index ≥ `from` at which `series` is ≤ threshold after having been
/// above it at some index ≥ `from`. nullopt if that never happens.
std::optional<std::size_t> first_crossing_below(std::span<const double> series, double threshold,
                                                std::size_t from = 0);

double to_db(double linear);

}  // namespace asdn
