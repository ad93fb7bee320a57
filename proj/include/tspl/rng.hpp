#pragma once

#include <cstdint>
#include <random>

namespace tspl {

/// Deterministic uniform generator. Draws are derived from the raw mt19937_64
/// stream so that a given seed produces the same sequence on every platform
/// (std::uniform_real_distribution does not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

} // namespace tspl
