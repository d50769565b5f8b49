#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptile/aging.hpp"
#include "ptile/clock.hpp"
#include "ptile/loadgen.hpp"
#include "ptile/thermal.hpp"

namespace ptile {

struct SimConfig {
    TickConfig tick;
    LoadSpec load;
    ThermalSpec thermal;
    AgingSpec aging;  // aging.dt_hours is always derived from tick
    std::uint64_t seed = 0;
    int replicates = 1;
};

/// One row of the simulation trace.
struct TickRecord {
    ClockStamp stamp;
    double current = 0.0;  // A
    double k = 0.0;
    double dto = 0.0, dtw = 0.0, dta = 0.0, t_hs = 0.0;  // degC
    double faa = 0.0;
    double cum_life = 0.0;  // hours
    double rol = 0.0;       // percent
};

struct SimulationResult {
    std::vector<TickRecord> ticks;  // replicate 0 trace
    double feqa = 0.0;
    LifeSummary life_summary;
    double rol_final = 0.0;         // percent
    std::int64_t filtered_k_count = 0;
    double k_rtl = 0.0;             // constant used, echoed into reports
};

struct BenchRow {
    int years = 0;
    double wall_seconds = 0.0;
};

struct PolyFit {
    std::vector<double> coefficients;  // ascending powers
    double rmse = 0.0;
    bool dof_normalized = false;  // true: sqrt(SSE/(n-(deg+1))); false: sqrt(SSE/n)
};

void validate(const SimConfig& cfg);

/// Full per-tick pipeline: clock -> load -> k -> thermal -> faa -> life -> rol.
/// Replicate r runs with seed cfg.seed + r; the trace is replicate 0's.
[[nodiscard]] SimulationResult run(const SimConfig& cfg);

/// Times the simulation loop (config handling and output excluded) for each
/// horizon in year_list; rows come back sorted by years.
[[nodiscard]] std::vector<BenchRow> bench(const SimConfig& cfg_base,
                                          const std::vector<int>& year_list);

/// Least-squares polynomial fit via normal equations. When n > degree+1 the
/// RMSE uses the degree-of-freedom normalization, otherwise SSE/n; the
/// normalization used is reported in the result.
[[nodiscard]] PolyFit polyfit(const std::vector<double>& xs,
                              const std::vector<double>& ys, int degree);

}  // namespace ptile
