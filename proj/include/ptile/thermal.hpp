#pragma once

#include <cstdint>
#include <vector>

#include "ptile/clock.hpp"

namespace ptile {

enum class CouplingMode { stochastic, k_coupled };

/// Field bounds for the three temperature-rise terms, the amplitude of the
/// hourly ambient variation factor, and the rise generation mode.
struct ThermalSpec {
    double dto_min = 0.0, dto_max = 0.0;  // top-oil rise, degC
    double dtw_min = 0.0, dtw_max = 0.0;  // winding rise, degC
    double dta_min = 0.0, dta_max = 0.0;  // ambient term, degC
    double zeta = 0.05;                   // amplitude of Z_i, in [0, 1)
    CouplingMode coupling = CouplingMode::stochastic;
};

struct ThermalState {
    ClockStamp stamp;
    double dto = 0.0;
    double dtw = 0.0;
    double dta = 0.0;
    double t_hs = 0.0;  // dto + dtw + dta
};

void validate(const ThermalSpec& spec);

/// Net hot-spot temperature: plain three-term sum.
[[nodiscard]] double hot_spot(double dto, double dtw, double dta);

/// One state per tick, deterministic under seed.
///
/// stochastic: dto, dtw, dta drawn uniform within bounds per tick; dta is then
/// scaled by Z, drawn once per simulated hour uniform on [1-zeta, 1+zeta] and
/// shared by every tick in that hour.
/// k_coupled: dto and dtw follow a k^2 law between their bounds using the
/// matching entry of k_series; dta as in stochastic mode.
[[nodiscard]] std::vector<ThermalState> generate_thermal(const ThermalSpec& spec,
                                                         const std::vector<ClockStamp>& ticks,
                                                         const std::vector<double>& k_series,
                                                         std::uint64_t seed);

}  // namespace ptile
