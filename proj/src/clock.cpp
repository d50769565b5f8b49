#include "ptile/clock.hpp"

#include <stdexcept>

namespace ptile {

bool is_valid_interval(int interval_minutes) {
    return interval_minutes > 0 && interval_minutes <= 60 && 60 % interval_minutes == 0;
}

bool is_valid(const ClockStamp& s) {
    return s.year >= 1 && s.day >= 1 && s.day <= kDaysPerYear && s.hour >= 0 &&
           s.hour <= 23 && s.minute >= 0 && s.minute <= 59;
}

void validate(const TickConfig& cfg) {
    if (!is_valid_interval(cfg.interval_minutes)) {
        throw std::invalid_argument("interval_minutes must be a positive divisor of 60");
    }
    if (cfg.horizon_years < 1) {
        throw std::invalid_argument("horizon_years must be >= 1");
    }
}

ClockStamp advance(const ClockStamp& stamp, int interval_minutes) {
    ClockStamp s = stamp;
    s.minute += interval_minutes;
    s.hour += s.minute / 60;
    s.minute %= 60;
    s.day += s.hour / 24;
    s.hour %= 24;
    while (s.day > kDaysPerYear) {
        s.day -= kDaysPerYear;
        ++s.year;
    }
    return s;
}

std::int64_t tick_count(const TickConfig& cfg) {
    validate(cfg);
    return static_cast<std::int64_t>(cfg.horizon_years) * kDaysPerYear * 24 *
           (60 / cfg.interval_minutes);
}

namespace {
std::int64_t total_minutes(const ClockStamp& s) {
    return (((static_cast<std::int64_t>(s.year - 1) * kDaysPerYear + (s.day - 1)) * 24 +
             s.hour) *
            60) +
           s.minute;
}
}  // namespace

double elapsed_hours(const ClockStamp& start, const ClockStamp& end) {
    if (start > end) {
        throw std::invalid_argument("elapsed_hours: start is after end");
    }
    return static_cast<double>(total_minutes(end) - total_minutes(start)) / 60.0;
}

std::vector<ClockStamp> make_ticks(const TickConfig& cfg) {
    const auto n = tick_count(cfg);
    std::vector<ClockStamp> ticks;
    ticks.reserve(static_cast<std::size_t>(n));
    ClockStamp s{};
    for (std::int64_t i = 0; i < n; ++i) {
        s = advance(s, cfg.interval_minutes);
        ticks.push_back(s);
    }
    return ticks;
}

}  // namespace ptile
