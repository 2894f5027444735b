#ifndef RAMP_RNG_HPP
#define RAMP_RNG_HPP

#include <cstdint>

namespace ramp {

/// SplitMix64 stream keyed by (seed, stream index).
///
/// Each Monte Carlo trial owns stream index == trial index, so results are
/// identical no matter how trials are scheduled or batched. SplitMix64 is
/// the Steele-Lea-Flood mixer; 64-bit state, full-period, trivially
/// splittable by keying.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1), 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace ramp

#endif
