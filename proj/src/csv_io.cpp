#include "ptile/csv_io.hpp"

#include <stdexcept>

#include "ptile/format.hpp"

namespace ptile {

namespace {
void check_sink(const std::ostream& sink) {
    if (!sink) {
        throw std::runtime_error("sink write failure");
    }
}
}  // namespace

void write_trace(const SimulationResult& result, std::ostream& sink) {
    sink << "tick,year,day,hour,minute,current_a,k_factor,dto_c,dtw_c,dta_c,ths_c,faa,"
            "cum_life_h,rol_pct\n";
    std::int64_t tick = 0;
    for (const auto& t : result.ticks) {
        ++tick;
        sink << tick << ',' << t.stamp.year << ',' << t.stamp.day << ',' << t.stamp.hour
             << ',' << t.stamp.minute << ',' << format_real(t.current) << ','
             << format_real(t.k) << ',' << format_real(t.dto) << ',' << format_real(t.dtw)
             << ',' << format_real(t.dta) << ',' << format_real(t.t_hs) << ','
             << format_real(t.faa) << ',' << format_real(t.cum_life) << ','
             << format_real(t.rol) << '\n';
    }
    check_sink(sink);
}

void write_summary(const SimulationResult& result,
                   const std::optional<std::vector<BenchRow>>& bench_rows,
                   std::ostream& sink) {
    sink << "feqa = " << format_real(result.feqa) << "\n"
         << "life_mean_h = " << format_real(result.life_summary.mean) << "\n"
         << "life_min_h = " << format_real(result.life_summary.min) << "\n"
         << "life_max_h = " << format_real(result.life_summary.max) << "\n"
         << "rol_final_pct = " << format_real(result.rol_final) << "\n"
         << "filtered_k_count = " << result.filtered_k_count << "\n"
         << "k_rtl_h = " << format_real(result.k_rtl) << "\n";
    if (bench_rows) {
        sink << "\nyears,wall_seconds\n";
        std::vector<double> xs, ys;
        for (const auto& row : *bench_rows) {
            sink << row.years << ',' << format_real(row.wall_seconds) << "\n";
            xs.push_back(static_cast<double>(row.years));
            ys.push_back(row.wall_seconds);
        }
        const auto fit = polyfit(xs, ys, 3);
        sink << "\nfit_degree = 3\n";
        for (std::size_t p = 0; p < fit.coefficients.size(); ++p) {
            sink << "coeff_x" << p << " = " << format_real(fit.coefficients[p]) << "\n";
        }
        sink << "rmse = " << format_real(fit.rmse) << "\n"
             << "rmse_normalization = " << (fit.dof_normalized ? "n_minus_terms" : "n")
             << "\n";
    }
    check_sink(sink);
}

void write_bench(const std::vector<BenchRow>& rows, std::ostream& sink) {
    sink << "years,wall_seconds\n";
    for (const auto& row : rows) {
        sink << row.years << ',' << format_real(row.wall_seconds) << '\n';
    }
    check_sink(sink);
}

}  // namespace ptile
