#include "asdn/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "asdn/config.hpp"

namespace asdn {

namespace {

std::string num(double v, const char* fmt = "%.10g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += num(values[i], "%.17g");
  }
  return out;
}

void write_summary(std::ostream& out, const char* prefix, const SegmentSummary& s) {
  out << prefix << ".window = " << s.begin << ',' << s.end << '\n';
  out << prefix << ".sampled = " << num(s.sampled) << '\n';
  out << prefix << ".msd_db = " << num(s.msd_db) << '\n';
  out << prefix << ".comms = " << num(s.communications) << '\n';
  out << prefix << ".mults = " << num(s.mults) << '\n';
  out << prefix << ".adds = " << num(s.adds) << '\n';
}

std::ofstream open_for_write(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const CampaignResult& result) {
  out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < result.series.size(); ++i) {
    const auto& a = result.series[i];
    out << a.n << ',' << num(result.msd_db[i]) << ',' << num(result.msd_db_smoothed[i]) << ','
        << num(a.sampled) << ',' << num(a.communications) << ',' << num(a.mults) << ','
        << num(a.adds) << '\n';
  }
}

void write_manifest(std::ostream& out, const CampaignResult& result) {
  const Scenario& sc = result.scenario;
  out << "# configuration\n";
  write_config(out, result.config);
  out << "# drawn scenario\n";
  out << "scenario.nodes = " << sc.topology.size() << '\n';
  out << "scenario.edges = " << sc.topology.edges().size() << '\n';
  out << "scenario.sigma2_v = " << list(sc.env.sigma2_v) << '\n';
  out << "scenario.sigma2_u = " << list(sc.env.sigma2_u) << '\n';
  out << "scenario.sigma2_min = " << num(sc.env.sigma2_min(), "%.17g") << '\n';
  out << "scenario.sigma2_max = " << num(sc.env.sigma2_max(), "%.17g") << '\n';
  out << "scenario.step_sizes = " << list(sc.step_sizes) << '\n';
  out << "scenario.w_opt = " << list(sc.env.w_opt) << '\n';
  out << "# steady state (final 20% of each segment)\n";
  write_summary(out, "summary.pre_flip", result.pre_flip);
  if (result.post_flip) write_summary(out, "summary.post_flip", *result.post_flip);
  if (result.prediction) {
    const auto& p = *result.prediction;
    out << "# predicted steady-state sampled nodes\n";
    out << "prediction.beta = " << num(p.beta, "%.17g") << '\n';
    out << "prediction.theta_max = " << num(p.theta.theta_max) << '\n';
    out << "prediction.theta_min = " << num(p.theta.theta_min) << '\n';
    out << "prediction.theta_bar_max = " << num(p.theta.theta_bar_max) << '\n';
    out << "prediction.theta_bar_min = " << num(p.theta.theta_bar_min) << '\n';
    out << "prediction.duty_lower = " << num(p.duty_lower) << '\n';
    out << "prediction.duty_upper = " << num(p.duty_upper) << '\n';
    out << "prediction.vs_lower = " << num(p.bounds.lower) << '\n';
    out << "prediction.vs_upper = " << num(p.bounds.upper) << '\n';
  } else if (result.config.policy.adaptive()) {
    out << "# beta below sigma2_max: no steady-state prediction\n";
  }
}

OutputPaths write_outputs(const CampaignResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " +
                                   ec.message());
  OutputPaths paths{dir / (result.config.name + ".csv"), dir / (result.config.name + ".manifest"),
                    dir / (result.config.name + ".edges")};
  {
    auto out = open_for_write(paths.csv);
    write_csv(out, result);
  }
  {
    auto out = open_for_write(paths.manifest);
    write_manifest(out, result);
  }
  {
    auto out = open_for_write(paths.edges);
    write_edge_list(out, result.scenario.topology);
  }
  return paths;
}

}  // namespace asdn
