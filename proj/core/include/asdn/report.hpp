#pragma once

#include <filesystem>
#include <iosfwd>

#include "asdn/harness.hpp"

namespace asdn {

inline constexpr const char* kCsvHeader = "n,msd_db,msd_db_smoothed,sampled,comms,mults,adds";

/// One row per iteration under kCsvHeader. Counts are realization means.
void write_csv(std::ostream& out, const CampaignResult& result);

/// Human-readable `key = value` manifest: the full config, the drawn
/// profiles, steady-state summaries and, for adaptive policies, the
/// predicted sampled-node bounds.
void write_manifest(std::ostream& out, const CampaignResult& result);

struct OutputPaths {
  std::filesystem::path csv;
  std::filesystem::path manifest;
  std::filesystem::path edges;
};

/// Writes <name>.csv, <name>.manifest and <name>.edges into `dir`, creating
/// it if needed. Throws std::runtime_error when the directory is unwritable.
OutputPaths write_outputs(const CampaignResult& result, const std::filesystem::path& dir);

}  // namespace asdn
