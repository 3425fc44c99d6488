#include "asdn/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace asdn {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += fmt_double(values[i]);
  }
  return out;
}

class Entries {
 public:
  void add(const std::string& key, const std::string& value, int line) {
    if (!map_.emplace(key, Item{value, line, false}).second) {
      throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return map_.count(key) != 0; }

  const std::string* take(const std::string& key) {
    auto it = map_.find(key);
    if (it == map_.end()) return nullptr;
    it->second.used = true;
    return &it->second.value;
  }

  int line_of(const std::string& key) const { return map_.at(key).line; }

  void reject_unused() const {
    for (const auto& [key, item] : map_) {
      if (!item.used) {
        throw ConfigError("line " + std::to_string(item.line) + ": unknown key '" + key + "'");
      }
    }
  }

 private:
  struct Item {
    std::string value;
    int line;
    bool used;
  };
  std::map<std::string, Item> map_;
};

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* want) {
  throw ConfigError("key '" + key + "': expected " + want + ", got '" + value + "'");
}

double as_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) bad_value(key, v, "a number");
    return d;
  } catch (const std::logic_error&) {
    bad_value(key, v, "a number");
  }
}

std::size_t as_size(const std::string& key, const std::string& v) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, v, "a non-negative integer");
  return out;
}

std::vector<double> as_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(as_double(key, trim(item)));
  if (out.empty()) bad_value(key, v, "a comma-separated list of numbers");
  return out;
}

void read_double(Entries& e, const std::string& key, double& dst) {
  if (const auto* v = e.take(key)) dst = as_double(key, *v);
}

void read_size(Entries& e, const std::string& key, std::size_t& dst) {
  if (const auto* v = e.take(key)) dst = as_size(key, *v);
}

// `unit_allowed`: the input profile uses an empty fixed profile for "all ones"
void read_profile(Entries& e, const std::string& prefix, Profile& dst, bool unit_allowed) {
  if (const auto* kind = e.take(prefix + ".profile")) {
    if (unit_allowed && *kind == "unit") {
      dst = Profile::fixed({});
    } else {
      try {
        dst.kind = profile_kind_from_string(*kind);
      } catch (const std::invalid_argument&) {
        bad_value(prefix + ".profile", *kind, "uniform, pinned_uniform or fixed");
      }
    }
  }
  read_double(e, prefix + ".min", dst.lo);
  read_double(e, prefix + ".max", dst.hi);
  if (const auto* v = e.take(prefix + ".values")) {
    dst.values = as_list(prefix + ".values", *v);
    if (!e.has(prefix + ".profile")) dst.kind = Profile::Kind::fixed;
  }
  if (dst.kind == Profile::Kind::fixed && dst.values.empty() && !unit_allowed) {
    throw ConfigError(prefix + ": fixed profile needs " + prefix + ".values");
  }
}

void write_profile(std::ostream& out, const std::string& prefix, const Profile& p, bool unit) {
  if (unit && p.kind == Profile::Kind::fixed && p.values.empty()) {
    out << prefix << ".profile = unit\n";
    return;
  }
  out << prefix << ".profile = " << to_string(p.kind) << '\n';
  if (p.kind == Profile::Kind::fixed) {
    out << prefix << ".values = " << join(p.values) << '\n';
  } else {
    out << prefix << ".min = " << fmt_double(p.lo) << '\n';
    out << prefix << ".max = " << fmt_double(p.hi) << '\n';
  }
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  Entries e;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
    }
    e.add(key, value, line_no);
  }

  RunConfig cfg;
  if (const auto* v = e.take("name")) cfg.name = *v;

  read_size(e, "topology.nodes", cfg.nodes);
  read_double(e, "topology.radius", cfg.radius);
  if (const auto* v = e.take("topology.edge_list")) {
    std::filesystem::path p(*v);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    cfg.edge_list = p.string();
  }
  if (const auto* v = e.take("topology.initial_weights")) {
    if (*v == "uniform") {
      cfg.initial_weights = InitialWeights::uniform;
    } else if (*v == "metropolis") {
      cfg.initial_weights = InitialWeights::metropolis;
    } else {
      bad_value("topology.initial_weights", *v, "uniform or metropolis");
    }
  }

  read_size(e, "env.order", cfg.order);
  read_profile(e, "env.noise", cfg.noise, false);
  read_profile(e, "env.input", cfg.input, true);
  read_profile(e, "env.step", cfg.step_size, false);
  if (const auto* v = e.take("env.flip_iteration")) {
    if (*v == "none") {
      cfg.flip_iteration.reset();
    } else {
      cfg.flip_iteration = as_size("env.flip_iteration", *v);
    }
  }
  read_double(e, "env.delta", cfg.delta);
  read_double(e, "env.nu", cfg.nu);

  if (const auto* v = e.take("policy.kind")) {
    try {
      cfg.policy.kind = policy_kind_from_string(*v);
    } catch (const std::invalid_argument&) {
      bad_value("policy.kind", *v, "a policy name");
    }
  }
  read_double(e, "policy.beta", cfg.policy.sampler.beta);
  read_double(e, "policy.mu_s", cfg.policy.sampler.mu_s);
  read_double(e, "policy.alpha_plus", cfg.policy.sampler.alpha_plus);
  read_size(e, "policy.sampled_nodes", cfg.policy.sampled_nodes);
  read_double(e, "policy.link_probability", cfg.policy.link_probability);

  read_size(e, "run.iterations", cfg.iterations);
  read_size(e, "run.realizations", cfg.realizations);
  if (const auto* v = e.take("run.seed")) cfg.seed = as_size("run.seed", *v);
  if (const auto* v = e.take("run.output_dir")) cfg.output_dir = *v;
  if (const auto* v = e.take("run.count_mode")) {
    if (*v == "unicast") {
      cfg.count_mode = CountMode::unicast;
    } else if (*v == "broadcast") {
      cfg.count_mode = CountMode::broadcast;
    } else {
      bad_value("run.count_mode", *v, "unicast or broadcast");
    }
  }
  read_size(e, "run.threads", cfg.threads);
  read_size(e, "run.smoothing", cfg.smoothing);

  e.reject_unused();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "': file not found");
  return parse_config(in, path.parent_path());
}

void write_config(std::ostream& out, const RunConfig& cfg) {
  out << "name = " << cfg.name << '\n';
  out << "topology.nodes = " << cfg.nodes << '\n';
  out << "topology.radius = " << fmt_double(cfg.radius) << '\n';
  if (!cfg.edge_list.empty()) out << "topology.edge_list = " << cfg.edge_list << '\n';
  out << "topology.initial_weights = "
      << (cfg.initial_weights == InitialWeights::metropolis ? "metropolis" : "uniform") << '\n';
  out << "env.order = " << cfg.order << '\n';
  write_profile(out, "env.noise", cfg.noise, false);
  write_profile(out, "env.input", cfg.input, true);
  write_profile(out, "env.step", cfg.step_size, false);
  out << "env.flip_iteration = "
      << (cfg.flip_iteration ? std::to_string(*cfg.flip_iteration) : std::string("none")) << '\n';
  out << "env.delta = " << fmt_double(cfg.delta) << '\n';
  out << "env.nu = " << fmt_double(cfg.nu) << '\n';
  out << "policy.kind = " << to_string(cfg.policy.kind) << '\n';
  out << "policy.beta = " << fmt_double(cfg.policy.sampler.beta) << '\n';
  out << "policy.mu_s = " << fmt_double(cfg.policy.sampler.mu_s) << '\n';
  out << "policy.alpha_plus = " << fmt_double(cfg.policy.sampler.alpha_plus) << '\n';
  out << "policy.sampled_nodes = " << cfg.policy.sampled_nodes << '\n';
  out << "policy.link_probability = " << fmt_double(cfg.policy.link_probability) << '\n';
  out << "run.iterations = " << cfg.iterations << '\n';
  out << "run.realizations = " << cfg.realizations << '\n';
  out << "run.seed = " << cfg.seed << '\n';
  out << "run.output_dir = " << cfg.output_dir << '\n';
  out << "run.count_mode = " << (cfg.count_mode == CountMode::broadcast ? "broadcast" : "unicast")
      << '\n';
  out << "run.threads = " << cfg.threads << '\n';
  out << "run.smoothing = " << cfg.smoothing << '\n';
}

Scenario check_config(const RunConfig& cfg) { return prepare(cfg); }

}  // namespace asdn
