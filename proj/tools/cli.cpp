#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "asdn/analysis.hpp"
#include "asdn/config.hpp"
#include "asdn/presets.hpp"
#include "asdn/report.hpp"

namespace asdn::cli {

namespace {

std::string output_dir(const std::string& flag, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return fallback;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void print_summary(std::ostream& out, const CampaignResult& r, const OutputPaths& paths) {
  out << r.config.name << ": steady-state sampled " << num(r.pre_flip.sampled) << ", MSD "
      << num(r.pre_flip.msd_db) << " dB, comms " << num(r.pre_flip.communications) << '\n';
  if (r.post_flip) {
    out << r.config.name << ": after flip sampled " << num(r.post_flip->sampled) << ", MSD "
        << num(r.post_flip->msd_db) << " dB\n";
  }
  if (r.prediction) {
    out << r.config.name << ": predicted bounds [" << num(r.prediction->bounds.lower) << ", "
        << num(r.prediction->bounds.upper) << "]\n";
  }
  out << "wrote " << paths.csv.string() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive-sampling diffusion NLMS network simulator", "asdn"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::size_t threads = 0;
  auto* run_cmd = app.add_subcommand("run", "Run a Monte Carlo campaign from a config file");
  run_cmd->add_option("--config", config_path, "Config file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

  std::string preset_name;
  PresetOptions preset_opts;
  std::optional<std::size_t> realizations;
  std::optional<std::size_t> iterations;
  auto* preset_cmd = app.add_subcommand("preset", "Run a figure preset");
  preset_cmd->add_option("name", preset_name, "fig_msd_cost, fig_beta_sweep or fig_censoring")
      ->required();
  preset_cmd->add_option("--seed", preset_opts.seed, "Base seed");
  preset_cmd->add_option("--realizations", realizations, "Realizations per variant");
  preset_cmd->add_option("--iterations", iterations, "Iterations per realization");
  preset_cmd->add_option("--out", out_dir, "Output directory");
  preset_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

  std::size_t nodes = 0;
  double beta = 0.0, s2min = 0.0, s2max = 0.0;
  auto* predict_cmd = app.add_subcommand("predict", "Print steady-state sampled-node bounds");
  predict_cmd->add_option("--V", nodes, "Number of nodes")->required();
  predict_cmd->add_option("--beta", beta, "Sampling penalty")->required();
  predict_cmd->add_option("--sigma2-min", s2min, "Smallest noise variance")->required();
  predict_cmd->add_option("--sigma2-max", s2max, "Largest noise variance")->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check a config without running it");
  validate_cmd->add_option("--config", config_path, "Config file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      RunConfig cfg = load_config(config_path);
      cfg.output_dir = output_dir(out_dir, cfg.output_dir);
      if (threads) cfg.threads = threads;
      const Scenario scenario = check_config(cfg);
      const CampaignResult result = monte_carlo(cfg, scenario);
      print_summary(out, result, write_outputs(result, cfg.output_dir));
    } else if (*preset_cmd) {
      preset_opts.realizations = realizations;
      preset_opts.iterations = iterations;
      preset_opts.output_dir = output_dir(out_dir, preset_opts.output_dir);
      preset_opts.threads = threads;
      const PresetReport report = run_preset(preset_name, preset_opts, &out);
      for (const auto& f : report.files) out << "wrote " << f.csv.string() << '\n';
      if (report.bounds) out << "wrote " << report.bounds->string() << '\n';
    } else if (*predict_cmd) {
      const SteadyStatePrediction p = predict(nodes, beta, s2min, s2max);
      out << "theta_max = " << num(p.theta.theta_max) << '\n'
          << "theta_min = " << num(p.theta.theta_min) << '\n'
          << "theta_bar_max = " << num(p.theta.theta_bar_max) << '\n'
          << "theta_bar_min = " << num(p.theta.theta_bar_min) << '\n'
          << "duty_lower = " << num(p.duty_lower) << '\n'
          << "duty_upper = " << num(p.duty_upper) << '\n'
          << "lower = " << num(p.bounds.lower) << '\n'
          << "upper = " << num(p.bounds.upper) << '\n';
    } else if (*validate_cmd) {
      const RunConfig cfg = load_config(config_path);
      const Scenario sc = check_config(cfg);
      out << "config OK: " << sc.topology.size() << " nodes, " << sc.topology.edges().size()
          << " links, policy " << to_string(cfg.policy.kind) << '\n';
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TopologyError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace asdn::cli
