#include "asdn/rng.hpp"

namespace asdn {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(const StreamKey& key) {
  std::uint64_t h = mix(key.seed);
  h = mix(h ^ key.realization);
  h = mix(h ^ key.node);
  h = mix(h ^ static_cast<std::uint64_t>(key.role));
  return h;
}

Engine make_engine(const StreamKey& key) {
  const std::uint64_t s = derive_seed(key);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(key.role)};
  return Engine(seq);
}

}  // namespace asdn
