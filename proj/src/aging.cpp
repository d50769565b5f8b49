#include "ptile/aging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptile {

void validate(const AgingSpec& spec) {
    if (spec.k_rtl <= 0.0) {
        throw std::invalid_argument("k_rtl must be positive");
    }
    if (spec.dt_hours <= 0.0 || spec.dt_hours > 1.0) {
        throw std::invalid_argument("dt_hours must lie in (0, 1]");
    }
}

double faa(double t_hs) {
    if (t_hs <= -273.0) {
        throw std::invalid_argument("faa: hot-spot temperature at or below -273 degC");
    }
    return std::exp(15000.0 / 383.0 - 15000.0 / (t_hs + 273.0));
}

double feqa(const std::vector<double>& faa_series, double dt_hours) {
    if (faa_series.empty()) {
        throw std::invalid_argument("feqa: empty series");
    }
    if (dt_hours <= 0.0) {
        throw std::invalid_argument("feqa: dt_hours must be positive");
    }
    double sum = 0.0;
    for (double f : faa_series) sum += f * dt_hours;
    return sum / (static_cast<double>(faa_series.size()) * dt_hours);
}

std::vector<double> accumulate_life(const std::vector<double>& faa_series,
                                    double dt_hours) {
    if (faa_series.empty()) {
        throw std::invalid_argument("accumulate_life: empty series");
    }
    if (dt_hours <= 0.0) {
        throw std::invalid_argument("accumulate_life: dt_hours must be positive");
    }
    std::vector<double> out;
    out.reserve(faa_series.size());
    double acc = 0.0;
    for (double f : faa_series) {
        acc += f * dt_hours;
        out.push_back(acc);
    }
    return out;
}

double rol(double cum_life, double k_rtl) {
    if (k_rtl <= 0.0) {
        throw std::invalid_argument("rol: k_rtl must be positive");
    }
    return cum_life / k_rtl * 100.0;
}

LifeSummary life_summary(const std::vector<double>& replicate_finals) {
    if (replicate_finals.empty()) {
        throw std::invalid_argument("life_summary: empty input");
    }
    double sum = 0.0;
    for (double v : replicate_finals) sum += v;
    const auto [mn, mx] =
        std::minmax_element(replicate_finals.begin(), replicate_finals.end());
    return {sum / static_cast<double>(replicate_finals.size()), *mn, *mx};
}

}  // namespace ptile
