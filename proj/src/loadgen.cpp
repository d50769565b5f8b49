#include "ptile/loadgen.hpp"

#include <cmath>
#include <stdexcept>

#include "ptile/random.hpp"

namespace ptile {

void validate(const LoadSpec& spec) {
    if (spec.i_rated <= 0.0) {
        throw std::invalid_argument("i_rated must be positive");
    }
    if (spec.i_min < 0.0 || spec.i_min > spec.i_max) {
        throw std::invalid_argument("current bounds must satisfy 0 <= i_min <= i_max");
    }
    if (spec.k_min < 0.0 || spec.k_min >= spec.k_max) {
        throw std::invalid_argument("k bounds must satisfy 0 <= k_min < k_max");
    }
}

double k_factor(double current, double i_rated) {
    if (i_rated <= 0.0) {
        throw std::invalid_argument("k_factor: rated current must be positive");
    }
    return current / i_rated;
}

namespace {
double diurnal_ramp(const ClockStamp& s, double lo, double hi) {
    // Triangle over the 1440-minute day: lo at midnight, hi at noon.
    const double phase = static_cast<double>(s.hour * 60 + s.minute) / 1440.0;
    const double tri = 1.0 - std::abs(2.0 * phase - 1.0);
    return lo + (hi - lo) * tri;
}
}  // namespace

std::vector<LoadSample> generate_currents(const LoadSpec& spec,
                                          const std::vector<ClockStamp>& ticks,
                                          std::uint64_t seed) {
    validate(spec);
    if (ticks.empty()) {
        throw std::invalid_argument("generate_currents: tick sequence is empty");
    }
    UniformSource rng(seed);
    std::vector<LoadSample> out;
    out.reserve(ticks.size());
    for (const auto& stamp : ticks) {
        double current = spec.generator_kind == GeneratorKind::uniform_random
                             ? rng.uniform(spec.i_min, spec.i_max)
                             : diurnal_ramp(stamp, spec.i_min, spec.i_max);
        out.push_back({stamp, current, k_factor(current, spec.i_rated)});
    }
    return out;
}

LoadStats load_stats(const std::vector<LoadSample>& samples) {
    if (samples.empty()) {
        throw std::invalid_argument("load_stats: empty sample sequence");
    }
    const auto n = static_cast<std::int64_t>(samples.size());
    double sum = 0.0;
    for (const auto& s : samples) sum += s.current;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& s : samples) {
        const double d = s.current - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / static_cast<double>(n)), n};
}

std::vector<int> filter_suboptimal_k(const std::vector<double>& ks, double k_min,
                                     double k_max) {
    if (k_min >= k_max) {
        throw std::invalid_argument("filter_suboptimal_k: k_min must be < k_max");
    }
    std::vector<int> out;
    out.reserve(ks.size());
    for (double k : ks) {
        out.push_back(k > k_min && k < k_max ? 1 : 0);
    }
    return out;
}

}  // namespace ptile
