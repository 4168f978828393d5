#include "zeno/sampling.hpp"

#include <cmath>

#include "zeno/errors.hpp"

namespace zeno {

ShotHistogram sample_shots(double p0, int shots, std::uint64_t seed) {
    if (!std::isfinite(p0) || p0 < 0.0 || p0 > 1.0)
        throw invalid_parameter_error("sample_shots: p0 must lie in [0, 1]");
    if (shots < 1)
        throw invalid_parameter_error("sample_shots: shots must be >= 1");

    SplitMix64 rng(seed);
    int counts0 = 0;
    for (int i = 0; i < shots; ++i)
        if (rng.uniform01() < p0)
            ++counts0;

    ShotHistogram h;
    h.shots = shots;
    h.counts0 = counts0;
    h.counts1 = shots - counts0;
    h.seed = seed;
    return h;
}

} // namespace zeno
