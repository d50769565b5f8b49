#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ptile {

/// Calendar position of a simulation tick. Years are fixed at 365 days;
/// there is no leap handling and no time-zone notion.
struct ClockStamp {
    int year = 1;    // >= 1
    int day = 1;     // [1, 365]
    int hour = 0;    // [0, 23]
    int minute = 0;  // [0, 59]

    auto operator<=>(const ClockStamp&) const = default;
};

constexpr int kDaysPerYear = 365;
constexpr int kHoursPerYear = kDaysPerYear * 24;

/// Tick granularity and horizon for one simulation.
struct TickConfig {
    int interval_minutes = 15;  // must divide 60
    int horizon_years = 1;      // >= 1
};

[[nodiscard]] bool is_valid_interval(int interval_minutes);
[[nodiscard]] bool is_valid(const ClockStamp& s);
void validate(const TickConfig& cfg);

/// Advances a stamp by interval_minutes, carrying into hour, day and year.
[[nodiscard]] ClockStamp advance(const ClockStamp& stamp, int interval_minutes);

/// Number of ticks in one full run: horizon_years * 365 * 24 * (60 / interval).
[[nodiscard]] std::int64_t tick_count(const TickConfig& cfg);

/// Hours between two ordered stamps. Throws std::invalid_argument if start > end.
[[nodiscard]] double elapsed_hours(const ClockStamp& start, const ClockStamp& end);

/// The ordered tick stamps of a run: origin (y1,d1,h0,m0) advanced 1..tick_count times.
[[nodiscard]] std::vector<ClockStamp> make_ticks(const TickConfig& cfg);

}  // namespace ptile
