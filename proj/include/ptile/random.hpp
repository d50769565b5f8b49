#pragma once

#include <cstdint>
#include <random>

namespace ptile {

/// Seeded uniform draw source. The seed -> stream mapping is fixed: the
/// generator is std::mt19937_64 (algorithm pinned by the standard) and each
/// uniform01() consumes exactly one 64-bit output, scaled to [0,1) from its
/// top 53 bits. No std:: distribution objects are used, so streams are
/// identical across standard-library implementations.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi]. lo == hi returns lo without consuming randomness
    /// differently (one draw is still consumed, keeping streams aligned).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace ptile
