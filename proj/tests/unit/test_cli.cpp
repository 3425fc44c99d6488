#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = asdn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("asdn_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path small_config(const fs::path& dir, const std::string& extra = {}) {
  const auto path = dir / "small.cfg";
  std::ofstream(path) << "name = small\n"
                         "policy.kind = as_sampling\n"
                         "env.order = 8\n"
                         "topology.nodes = 6\n"
                         "topology.radius = 0.8\n"
                         "run.iterations = 80\n"
                         "run.realizations = 2\n"
                         "run.threads = 1\n"
                      << "run.output_dir = " << (dir / "from_config").string() << '\n'
                      << extra;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("predict prints the sampled-node bounds") {
  const auto r = invoke({"predict", "--V", "20", "--beta", "0.68", "--sigma2-min", "0.1",
                         "--sigma2-max", "0.4"});
  CHECK(r.code == asdn::cli::kExitOk);
  CHECK(r.out.find("lower = 2.941176471\n") != std::string::npos);
  CHECK(r.out.find("upper = 11.76470588\n") != std::string::npos);
  CHECK(r.out.find("theta_bar_max = 5.8\n") != std::string::npos);
}

TEST_CASE("predict rejects an inadmissible beta") {
  const auto r = invoke({"predict", "--V", "20", "--beta", "0.3", "--sigma2-min", "0.1",
                         "--sigma2-max", "0.4"});
  CHECK(r.code == asdn::cli::kExitConfig);
}

TEST_CASE("argument errors") {
  CHECK(invoke({}).code == asdn::cli::kExitConfig);
  CHECK(invoke({"run"}).code == asdn::cli::kExitConfig);
  CHECK(invoke({"frobnicate"}).code == asdn::cli::kExitConfig);
  CHECK(invoke({"--help"}).code == asdn::cli::kExitOk);
}

TEST_CASE("missing config file") {
  const auto r = invoke({"run", "--config", "/nonexistent/asdn.cfg"});
  CHECK(r.code == asdn::cli::kExitConfig);
  CHECK(r.err.find("file not found") != std::string::npos);
}

TEST_CASE("validate and run agree") {
  const auto dir = scratch("agree");
  const auto good = small_config(dir);
  const auto v = invoke({"validate", "--config", good.string()});
  CHECK(v.code == asdn::cli::kExitOk);
  CHECK(v.out.find("config OK: 6 nodes") != std::string::npos);

  const auto bad = dir / "bad.cfg";
  std::ofstream(bad) << "env.step.max = 3\n";
  const auto vb = invoke({"validate", "--config", bad.string()});
  const auto rb = invoke({"run", "--config", bad.string()});
  CHECK(vb.code == asdn::cli::kExitConfig);
  CHECK(rb.code == vb.code);
  CHECK(rb.err == vb.err);
  fs::remove_all(dir);
}

TEST_CASE("run writes outputs with flag and environment precedence") {
  const auto dir = scratch("run");
  const auto cfg = small_config(dir);

  const auto r = invoke({"run", "--config", cfg.string()});
  REQUIRE(r.code == asdn::cli::kExitOk);
  std::ifstream csv(dir / "from_config" / "small.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "n,msd_db,msd_db_smoothed,sampled,comms,mults,adds");
  CHECK(fs::exists(dir / "from_config" / "small.manifest"));
  CHECK(r.out.find("predicted bounds") != std::string::npos);

  ::setenv(asdn::cli::kOutputDirEnv, (dir / "from_env").c_str(), 1);
  CHECK(invoke({"run", "--config", cfg.string()}).code == asdn::cli::kExitOk);
  CHECK(fs::exists(dir / "from_env" / "small.csv"));
  CHECK(invoke({"run", "--config", cfg.string(), "--out", (dir / "from_flag").string()}).code ==
        asdn::cli::kExitOk);
  CHECK(fs::exists(dir / "from_flag" / "small.csv"));
  ::unsetenv(asdn::cli::kOutputDirEnv);
  fs::remove_all(dir);
}

TEST_CASE("unwritable output directory is a runtime failure") {
  const auto dir = scratch("unwritable");
  const auto cfg = small_config(dir);
  std::ofstream(dir / "occupied") << "x";
  const auto r = invoke({"run", "--config", cfg.string(), "--out", (dir / "occupied" / "sub").string()});
  CHECK(r.code == asdn::cli::kExitRuntime);
  fs::remove_all(dir);
}

TEST_CASE("beta sweep preset") {
  const auto dir = scratch("sweep");
  const auto r = invoke({"preset", "fig_beta_sweep", "--realizations", "1", "--iterations", "60",
                         "--threads", "1", "--out", dir.string()});
  REQUIRE(r.code == asdn::cli::kExitOk);
  std::size_t csvs = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv" && entry.path().filename() != "bounds.csv") ++csvs;
  }
  CHECK(csvs == 7);
  std::ifstream bounds(dir / "bounds.csv");
  std::string line;
  std::getline(bounds, line);
  CHECK(line == "ratio,beta,vs_lower,vs_upper,measured");
  std::size_t rows = 0;
  while (std::getline(bounds, line)) ++rows;
  CHECK(rows == 7);
  fs::remove_all(dir);
}

TEST_CASE("unknown preset") {
  const auto r = invoke({"preset", "fig_unknown"});
  CHECK(r.code == asdn::cli::kExitConfig);
}

}  // TEST_SUITE
