#pragma once

#include <vector>

#include "ptile/clock.hpp"

namespace ptile {

/// Normal insulation life constant and tick interval in hours.
struct AgingSpec {
    double k_rtl = 65000.0;  // hours, > 0
    double dt_hours = 0.25;  // (0, 1], derived from TickConfig
};

struct AgingRecord {
    ClockStamp stamp;
    double faa = 0.0;       // > 0
    double cum_life = 0.0;  // hours, nondecreasing
    double rol = 0.0;       // percent, cum_life / k_rtl * 100
};

struct LifeSummary {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;  // all in hours
};

void validate(const AgingSpec& spec);

/// Accelerated aging factor exp(15000/383 - 15000/(t_hs + 273)).
/// Unity at 110 degC; the Kelvin offset is the literal 273 of the model.
[[nodiscard]] double faa(double t_hs);

/// Equivalent aging factor: the dt-weighted mean of the series. dt cancels,
/// so this is the arithmetic mean of the faa values.
[[nodiscard]] double feqa(const std::vector<double>& faa_series, double dt_hours);

/// Prefix sums of faa_n * dt, in hours.
[[nodiscard]] std::vector<double> accumulate_life(const std::vector<double>& faa_series,
                                                  double dt_hours);

/// Percent of normal life consumed; not clamped at 100.
[[nodiscard]] double rol(double cum_life, double k_rtl);

/// Mean/min/max of replicate final consumed-life values.
[[nodiscard]] LifeSummary life_summary(const std::vector<double>& replicate_finals);

}  // namespace ptile
