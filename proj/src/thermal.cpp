#include "ptile/thermal.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptile/random.hpp"

namespace ptile {

void validate(const ThermalSpec& spec) {
    if (spec.dto_min > spec.dto_max || spec.dtw_min > spec.dtw_max ||
        spec.dta_min > spec.dta_max) {
        throw std::invalid_argument("thermal bounds must satisfy min <= max");
    }
    if (spec.zeta < 0.0 || spec.zeta >= 1.0) {
        throw std::invalid_argument("zeta must lie in [0, 1)");
    }
}

double hot_spot(double dto, double dtw, double dta) { return dto + dtw + dta; }

namespace {
double k_squared_rise(double lo, double hi, double k) {
    return std::clamp(lo + (hi - lo) * k * k, lo, hi);
}
}  // namespace

std::vector<ThermalState> generate_thermal(const ThermalSpec& spec,
                                           const std::vector<ClockStamp>& ticks,
                                           const std::vector<double>& k_series,
                                           std::uint64_t seed) {
    validate(spec);
    if (ticks.size() != k_series.size()) {
        throw std::invalid_argument("generate_thermal: ticks and k_series length mismatch");
    }
    UniformSource rng(seed);
    std::vector<ThermalState> out;
    out.reserve(ticks.size());
    double z = 1.0;
    bool have_hour = false;
    int zy = 0, zd = 0, zh = -1;
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        const auto& s = ticks[i];
        // Z is redrawn whenever the simulated hour changes; the draw happens
        // before the per-tick draws so streams stay aligned across intervals.
        if (!have_hour || s.year != zy || s.day != zd || s.hour != zh) {
            z = rng.uniform(1.0 - spec.zeta, 1.0 + spec.zeta);
            zy = s.year;
            zd = s.day;
            zh = s.hour;
            have_hour = true;
        }
        double dto, dtw;
        if (spec.coupling == CouplingMode::stochastic) {
            dto = rng.uniform(spec.dto_min, spec.dto_max);
            dtw = rng.uniform(spec.dtw_min, spec.dtw_max);
        } else {
            dto = k_squared_rise(spec.dto_min, spec.dto_max, k_series[i]);
            dtw = k_squared_rise(spec.dtw_min, spec.dtw_max, k_series[i]);
        }
        const double dta = rng.uniform(spec.dta_min, spec.dta_max) * z;
        out.push_back({s, dto, dtw, dta, hot_spot(dto, dtw, dta)});
    }
    return out;
}

}  // namespace ptile
