#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "asdn/harness.hpp"

namespace asdn {

/// Flat `key = value` text, one entry per line, keys prefixed by section
/// (`topology.`, `env.`, `policy.`, `run.`). `#` starts a comment. Unknown or
/// repeated keys are errors. Relative `topology.edge_list` paths resolve
/// against `base_dir`.
RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});

/// Reads a config file; throws ConfigError when it is missing or malformed.
RunConfig load_config(const std::filesystem::path& path);

/// Writes every field so that parse_config() reproduces the config.
void write_config(std::ostream& out, const RunConfig& cfg);

/// Parse + validate + prepare: the same path `run` takes before simulating.
Scenario check_config(const RunConfig& cfg);

}  // namespace asdn
