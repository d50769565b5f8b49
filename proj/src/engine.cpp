#include "ptile/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace ptile {

void validate(const SimConfig& cfg) {
    validate(cfg.tick);
    validate(cfg.load);
    validate(cfg.thermal);
    validate(cfg.aging);
    if (cfg.replicates < 1) {
        throw std::invalid_argument("replicates must be >= 1");
    }
    const double dt = static_cast<double>(cfg.tick.interval_minutes) / 60.0;
    if (cfg.aging.dt_hours != dt) {
        throw std::invalid_argument("aging.dt_hours must equal interval_minutes / 60");
    }
}

namespace {

struct ReplicateRun {
    std::vector<TickRecord> trace;
    double final_life = 0.0;
};

ReplicateRun run_replicate(const SimConfig& cfg, std::uint64_t seed, bool keep_trace) {
    const auto ticks = make_ticks(cfg.tick);
    const auto samples = generate_currents(cfg.load, ticks, seed);
    std::vector<double> ks;
    ks.reserve(samples.size());
    for (const auto& s : samples) ks.push_back(s.k);
    const auto thermal = generate_thermal(cfg.thermal, ticks, ks, seed);

    ReplicateRun out;
    if (keep_trace) out.trace.reserve(ticks.size());
    double cum = 0.0;
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        const double f = faa(thermal[i].t_hs);
        cum += f * cfg.aging.dt_hours;
        if (keep_trace) {
            out.trace.push_back({ticks[i], samples[i].current, samples[i].k,
                                 thermal[i].dto, thermal[i].dtw, thermal[i].dta,
                                 thermal[i].t_hs, f, cum, rol(cum, cfg.aging.k_rtl)});
        }
    }
    out.final_life = cum;
    return out;
}

}  // namespace

SimulationResult run(const SimConfig& cfg) {
    validate(cfg);
    SimulationResult result;
    result.k_rtl = cfg.aging.k_rtl;

    std::vector<double> finals;
    finals.reserve(static_cast<std::size_t>(cfg.replicates));
    for (int r = 0; r < cfg.replicates; ++r) {
        auto rep = run_replicate(cfg, cfg.seed + static_cast<std::uint64_t>(r), r == 0);
        if (r == 0) result.ticks = std::move(rep.trace);
        finals.push_back(rep.final_life);
    }
    result.life_summary = life_summary(finals);

    std::vector<double> faas, ks;
    faas.reserve(result.ticks.size());
    ks.reserve(result.ticks.size());
    for (const auto& t : result.ticks) {
        faas.push_back(t.faa);
        ks.push_back(t.k);
    }
    result.feqa = feqa(faas, cfg.aging.dt_hours);
    result.rol_final = result.ticks.back().rol;
    const auto flags = filter_suboptimal_k(ks, cfg.load.k_min, cfg.load.k_max);
    result.filtered_k_count = 0;
    for (int f : flags) result.filtered_k_count += f;
    return result;
}

std::vector<BenchRow> bench(const SimConfig& cfg_base, const std::vector<int>& year_list) {
    if (year_list.empty()) {
        throw std::invalid_argument("bench: empty year list");
    }
    std::vector<BenchRow> rows;
    rows.reserve(year_list.size());
    for (int years : year_list) {
        if (years < 1) {
            throw std::invalid_argument("bench: years must be >= 1");
        }
        SimConfig cfg = cfg_base;
        cfg.tick.horizon_years = years;
        validate(cfg);
        const auto t0 = std::chrono::steady_clock::now();
        auto rep = run_replicate(cfg, cfg.seed, false);
        const auto t1 = std::chrono::steady_clock::now();
        (void)rep;
        rows.push_back({years, std::chrono::duration<double>(t1 - t0).count()});
    }
    std::sort(rows.begin(), rows.end(),
              [](const BenchRow& a, const BenchRow& b) { return a.years < b.years; });
    return rows;
}

PolyFit polyfit(const std::vector<double>& xs, const std::vector<double>& ys, int degree) {
    const std::size_t n = xs.size();
    const int m = degree + 1;
    if (degree < 0) {
        throw std::invalid_argument("polyfit: degree must be nonnegative");
    }
    if (n != ys.size()) {
        throw std::invalid_argument("polyfit: xs and ys length mismatch");
    }
    if (n < static_cast<std::size_t>(m)) {
        throw std::invalid_argument("polyfit: need at least degree+1 points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (xs[i] == xs[j]) {
                throw std::invalid_argument("polyfit: duplicate x values");
            }
        }
    }

    // Normal equations A c = b with A[p][q] = sum x^(p+q), b[p] = sum y x^p.
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> pw(2 * m - 1);
        pw[0] = 1.0;
        for (int p = 1; p < 2 * m - 1; ++p) pw[p] = pw[p - 1] * xs[i];
        for (int p = 0; p < m; ++p) {
            for (int q = 0; q < m; ++q) a[p][q] += pw[p + q];
            a[p][m] += ys[i] * pw[p];
        }
    }

    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (a[piv][col] == 0.0) {
            throw std::invalid_argument("polyfit: rank-deficient system");
        }
        std::swap(a[col], a[piv]);
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            const double factor = a[r][col] / a[col][col];
            for (int c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
        }
    }

    PolyFit fit;
    fit.coefficients.resize(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) fit.coefficients[static_cast<std::size_t>(p)] = a[p][m] / a[p][p];

    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double yhat = 0.0;
        for (int p = m - 1; p >= 0; --p) yhat = yhat * xs[i] + fit.coefficients[static_cast<std::size_t>(p)];
        const double r = ys[i] - yhat;
        sse += r * r;
    }
    fit.dof_normalized = n > static_cast<std::size_t>(m);
    const double denom = fit.dof_normalized ? static_cast<double>(n - static_cast<std::size_t>(m))
                                            : static_cast<double>(n);
    fit.rmse = std::sqrt(sse / denom);
    return fit;
}

}  // namespace ptile
