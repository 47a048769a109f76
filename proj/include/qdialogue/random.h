#ifndef QDIALOGUE_RANDOM_H
#define QDIALOGUE_RANDOM_H

#include <cstdint>
#include <random>

#include "qdialogue/bell.h"

namespace qdialogue {

/// Seeded source of all randomness in a simulation.
///
/// Draws are derived from the raw 64-bit output of mt19937_64 with fixed bit
/// manipulations, so a seed yields the same sequence on every platform.
class RandomStream {
   public:
    explicit RandomStream(uint64_t seed) : engine_(seed) {}

    /// Seed of the independent substream `index` of `master_seed`:
    /// splitmix64(master_seed + (index + 1) * golden_gamma).
    static uint64_t substream_seed(uint64_t master_seed, uint64_t index);
    static RandomStream substream(uint64_t master_seed, uint64_t index) {
        return RandomStream(substream_seed(master_seed, index));
    }

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bit() { return (engine_() >> 63) != 0; }

    /// True with probability p; p = 0 never fires and p = 1 always fires.
    bool bernoulli(double p) { return uniform() < p; }

    PauliCode code() { return PauliCode::from_index(static_cast<uint8_t>(engine_() >> 62)); }

   private:
    std::mt19937_64 engine_;
};

}  // namespace qdialogue

#endif
