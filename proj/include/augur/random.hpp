#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace augur {

// 64-bit finalizer (splitmix64). Full avalanche; used for seed derivation
// and as the row/seeded hash primitive across the library.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based seed splitting: child i of a master seed. Every experiment
// derives per-trial / per-row seeds this way, so a run is reproducible from
// (master seed, index) alone.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index + 1));
}

// Seeded hash of an item under a given hash-function seed.
constexpr std::uint64_t hash_item(std::uint64_t item, std::uint64_t seed) {
    return mix64(item ^ mix64(seed));
}

// Deterministic generator: mt19937_64 engine (bit-identical across
// platforms) with hand-rolled variate transforms. std::*_distribution is
// implementation-defined and must not be used where reproducibility
// matters, i.e. anywhere in this library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n), rejection-free modulo is fine at our scales.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace augur
