#include "asdn/presets.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace asdn {

namespace {

std::string ratio_tag(double r) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%g", r);
  return buf;
}

RunConfig base_for(const PresetOptions& opts) {
  RunConfig cfg = default_config();
  cfg.seed = opts.seed;
  cfg.output_dir = opts.output_dir;
  cfg.threads = opts.threads;
  if (opts.realizations) cfg.realizations = *opts.realizations;
  if (opts.iterations) {
    cfg.iterations = *opts.iterations;
    cfg.flip_iteration = cfg.iterations / 2;
  }
  return cfg;
}

RunConfig variant(RunConfig cfg, std::string name, PolicyKind kind) {
  cfg.name = std::move(name);
  cfg.policy.kind = kind;
  return cfg;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  cfg.name = "as_dnlms";
  cfg.nodes = 20;
  cfg.radius = 0.35;
  cfg.order = 50;
  cfg.noise = Profile::pinned(0.1, 0.4);
  cfg.step_size = Profile::uniform(0.2, 1.0);
  cfg.flip_iteration = 10000;
  cfg.delta = 1e-5;
  cfg.nu = 0.2;
  cfg.policy.kind = PolicyKind::as_sampling;
  cfg.policy.sampler = SamplerParams{4.0, 0.68, 0.1571};
  cfg.iterations = 20000;
  cfg.realizations = 100;
  return cfg;
}

std::vector<std::string> preset_names() { return {"fig_msd_cost", "fig_beta_sweep", "fig_censoring"}; }

std::vector<RunConfig> expand_preset(const std::string& name, const PresetOptions& opts) {
  const RunConfig base = base_for(opts);
  std::vector<RunConfig> out;
  if (name == "fig_msd_cost") {
    const Scenario sc = prepare(base);
    const std::size_t v = sc.topology.size();
    const auto b =
        sampled_node_bounds(v, base.policy.sampler.beta, sc.env.sigma2_min(), sc.env.sigma2_max());
    out.push_back(variant(base, "dnlms_full", PolicyKind::full));
    out.push_back(variant(base, "as_dnlms", PolicyKind::as_sampling));
    for (double target : {b.lower, b.upper, 0.8 * static_cast<double>(v)}) {
      const auto vs = static_cast<std::size_t>(std::lround(target));
      RunConfig cfg = variant(base, "random_vs" + std::to_string(vs), PolicyKind::random_sampling);
      cfg.policy.sampled_nodes = vs;
      out.push_back(std::move(cfg));
    }
  } else if (name == "fig_beta_sweep") {
    const Scenario sc = prepare(base);
    for (double r : kBetaRatios) {
      RunConfig cfg = variant(base, "beta_x" + ratio_tag(r), PolicyKind::as_sampling);
      cfg.policy.sampler.beta = r * sc.env.sigma2_max();
      cfg.flip_iteration.reset();
      out.push_back(std::move(cfg));
    }
  } else if (name == "fig_censoring") {
    out.push_back(variant(base, "dnlms_full", PolicyKind::full));
    out.push_back(variant(base, "as_dnlms", PolicyKind::as_sampling));
    out.push_back(variant(base, "as_dnlms_censoring", PolicyKind::as_censoring));
    RunConfig pt = variant(base, "pt_dnlms", PolicyKind::probabilistic_transmission);
    pt.policy.link_probability = 0.5;
    out.push_back(std::move(pt));
    out.push_back(variant(base, "non_cooperative", PolicyKind::non_cooperative));
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return out;
}

PresetReport run_preset(const std::string& name, const PresetOptions& opts, std::ostream* log) {
  const std::vector<RunConfig> variants = expand_preset(name, opts);
  PresetReport report;
  std::ofstream bounds;
  if (name == "fig_beta_sweep") {
    std::filesystem::create_directories(opts.output_dir);
    report.bounds = std::filesystem::path(opts.output_dir) / "bounds.csv";
    bounds.open(*report.bounds);
    if (!bounds) throw std::runtime_error("cannot write '" + report.bounds->string() + "'");
    bounds << "ratio,beta,vs_lower,vs_upper,measured\n";
  }
  for (std::size_t i = 0; i < variants.size(); ++i) {
    const RunConfig& cfg = variants[i];
    if (log) *log << "[" << (i + 1) << "/" << variants.size() << "] " << cfg.name << std::endl;
    const CampaignResult result = monte_carlo(cfg);
    report.files.push_back(write_outputs(result, cfg.output_dir));
    if (bounds.is_open() && result.prediction) {
      const auto& p = *result.prediction;
      char line[160];
      std::snprintf(line, sizeof line, "%g,%.10g,%.10g,%.10g,%.10g\n", kBetaRatios[i], p.beta,
                    p.bounds.lower, p.bounds.upper, result.pre_flip.sampled);
      bounds << line;
    }
  }
  return report;
}

}  // namespace asdn
