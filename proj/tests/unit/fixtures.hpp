#pragma once

#include "asdn/harness.hpp"
#include "asdn/presets.hpp"

namespace fixture {

/// Default experiment, shortened.
inline asdn::RunConfig small_config(asdn::PolicyKind kind, std::size_t iterations = 600,
                                    std::size_t realizations = 2) {
  asdn::RunConfig cfg = asdn::default_config();
  cfg.policy.kind = kind;
  cfg.iterations = iterations;
  cfg.realizations = realizations;
  cfg.flip_iteration = iterations / 2;
  cfg.threads = 1;
  return cfg;
}

}  // namespace fixture
