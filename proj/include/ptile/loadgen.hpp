#pragma once

#include <cstdint>
#include <vector>

#include "ptile/clock.hpp"

namespace ptile {

enum class GeneratorKind { uniform_random, linear_step };

/// Nameplate rating, field current bounds and the k-factor filter window.
struct LoadSpec {
    double i_rated = 0.0;  // amperes, > 0
    double i_min = 0.0;    // amperes
    double i_max = 0.0;    // amperes
    double k_min = 0.0;
    double k_max = 0.0;
    GeneratorKind generator_kind = GeneratorKind::uniform_random;
};

struct LoadSample {
    ClockStamp stamp;
    double current = 0.0;  // amperes
    double k = 0.0;        // current / i_rated
};

struct LoadStats {
    double mean = 0.0;
    double std = 0.0;  // population normalization (divide by n)
    std::int64_t n = 0;
};

void validate(const LoadSpec& spec);

/// Load-factor k = actual current over rated current.
[[nodiscard]] double k_factor(double current, double i_rated);

/// One sample per tick, deterministic under seed.
/// uniform_random draws each current independently uniform on [i_min, i_max];
/// linear_step is a seed-independent diurnal triangle ramp
/// i_min -> i_max -> i_min over each 24-hour window.
[[nodiscard]] std::vector<LoadSample> generate_currents(const LoadSpec& spec,
                                                        const std::vector<ClockStamp>& ticks,
                                                        std::uint64_t seed);

/// Sample mean and population standard deviation of the currents.
[[nodiscard]] LoadStats load_stats(const std::vector<LoadSample>& samples);

/// Indicator per k: 1 iff k_min < k < k_max (strict on both sides).
[[nodiscard]] std::vector<int> filter_suboptimal_k(const std::vector<double>& ks,
                                                   double k_min, double k_max);

}  // namespace ptile
