#pragma once

#include <cstdint>

namespace zeno {

// SplitMix64 (Vigna 2015, public-domain reference constants). The state
// advances by the 64-bit golden-ratio increment and the output is a fixed
// finalizer of the new state, so draw i from seed s is
//     mix(s + (i + 1) * 0x9E3779B97F4A7C15)
// which makes every stream a pure function of (seed, counter) and every
// histogram reproducible bit for bit across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

struct ShotHistogram {
    int shots = 0;
    int counts0 = 0;
    int counts1 = 0;
    std::uint64_t seed = 0;
};

// Binomial(shots, p0) histogram drawn as `shots` independent uniform
// variates compared against p0. Pure function of (p0, shots, seed).
ShotHistogram sample_shots(double p0, int shots, std::uint64_t seed);

} // namespace zeno
