#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "ptile/engine.hpp"

namespace ptile {

/// Trace CSV: header tick,year,day,hour,minute,current_a,k_factor,dto_c,
/// dtw_c,dta_c,ths_c,faa,cum_life_h,rol_pct, one row per tick, LF newlines,
/// reals in round-trip-exact form.
void write_trace(const SimulationResult& result, std::ostream& sink);

/// Summary text block: feqa, life mean/min/max, final rol, filter count and
/// the k_rtl used; with bench rows present, a years,wall_seconds table plus
/// the cubic fit coefficients and rmse.
void write_summary(const SimulationResult& result,
                   const std::optional<std::vector<BenchRow>>& bench_rows,
                   std::ostream& sink);

/// Benchmark CSV: header years,wall_seconds.
void write_bench(const std::vector<BenchRow>& rows, std::ostream& sink);

}  // namespace ptile
