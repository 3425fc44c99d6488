#pragma once

#include <cstdint>
#include <random>

namespace asdn {

using Engine = std::mt19937_64;
using Seed = std::uint64_t;

/// What a random stream is used for. Streams with different roles are
/// seeded independently, so changing how one role is consumed (e.g. a
/// sampling policy drawing extra numbers) never shifts another role.
enum class StreamRole : std::uint32_t {
  topology = 1,
  environment = 2,
  input = 3,
  noise = 4,
  policy = 5,
};

/// Identifies one independent random stream.
struct StreamKey {
  Seed seed = 0;
  std::uint64_t realization = 0;
  std::uint64_t node = 0;
  StreamRole role = StreamRole::input;
};

/// Node index used for network-wide (not per-node) streams.
inline constexpr std::uint64_t kNetworkStream = ~std::uint64_t{0};

/// Counter-style derivation: hashes the key into a 64-bit seed.
std::uint64_t derive_seed(const StreamKey& key);

/// Engine seeded from `derive_seed(key)`.
Engine make_engine(const StreamKey& key);

}  // namespace asdn
