#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "asdn/harness.hpp"
#include "asdn/report.hpp"

namespace asdn {

/// β/σ²_max values covered by the β sweep.
inline constexpr std::array<double, 7> kBetaRatios{1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 10.0};

/// Baseline experiment: V=20 random geometric graph (radius 0.35), M=50,
/// σ²_v pinned-uniform on [0.1, 0.4], μ̃ uniform on [0.2, 1.0], δ=1e-5,
/// ν=0.2, adaptive sampling with α⁺=4, β=0.68, μ_s=0.1571, 2×10⁴
/// iterations with w° flipped at 10⁴, 100 realizations.
RunConfig default_config();

struct PresetOptions {
  Seed seed = 1;
  std::optional<std::size_t> realizations;
  std::optional<std::size_t> iterations;  // flip stays at the midpoint
  std::string output_dir = "out";
  std::size_t threads = 0;
};

std::vector<std::string> preset_names();

/// Expands a preset into its variants. Throws ConfigError on unknown names.
///   fig_msd_cost   full dNLMS, adaptive sampling, random sampling at
///                  V_s ∈ {round(lower), round(upper), round(0.8 V)}
///   fig_beta_sweep adaptive sampling for each β/σ²_max in kBetaRatios,
///                  stationary (no flip)
///   fig_censoring  full dNLMS, adaptive sampling, censoring, probabilistic
///                  transmission (p = 0.5), non-cooperative
std::vector<RunConfig> expand_preset(const std::string& name, const PresetOptions& opts);

struct PresetReport {
  std::vector<OutputPaths> files;
  std::optional<std::filesystem::path> bounds;  // fig_beta_sweep only
};

/// Runs every variant and writes its outputs into opts.output_dir. The β
/// sweep also writes bounds.csv (ratio,beta,vs_lower,vs_upper,measured).
PresetReport run_preset(const std::string& name, const PresetOptions& opts,
                        std::ostream* log = nullptr);

}  // namespace asdn
