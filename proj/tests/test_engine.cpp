#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ptile/engine.hpp"

using namespace ptile;

namespace {

SimConfig degenerate_110(int interval_minutes, int years) {
    SimConfig cfg;
    cfg.tick = {interval_minutes, years};
    cfg.load = {600.0, 400.0, 400.0, 0.2, 0.9, GeneratorKind::uniform_random};
    cfg.thermal.dto_min = cfg.thermal.dto_max = 55.0;
    cfg.thermal.dtw_min = cfg.thermal.dtw_max = 30.0;
    cfg.thermal.dta_min = cfg.thermal.dta_max = 25.0;
    cfg.thermal.zeta = 0.0;
    cfg.aging = {65000.0, interval_minutes / 60.0};
    cfg.seed = 1;
    return cfg;
}

SimConfig random_config(std::mt19937& gen) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    SimConfig cfg;
    cfg.tick = {15, 1};
    cfg.load.i_rated = 400.0 + 400.0 * u01(gen);
    cfg.load.i_min = 50.0 + 100.0 * u01(gen);
    cfg.load.i_max = cfg.load.i_min + 400.0 * u01(gen);
    cfg.load.k_min = 0.1 + 0.2 * u01(gen);
    cfg.load.k_max = cfg.load.k_min + 0.5;
    cfg.load.generator_kind =
        u01(gen) < 0.5 ? GeneratorKind::uniform_random : GeneratorKind::linear_step;
    cfg.thermal.dto_min = 20.0 + 10.0 * u01(gen);
    cfg.thermal.dto_max = cfg.thermal.dto_min + 20.0 * u01(gen);
    cfg.thermal.dtw_min = 10.0 + 10.0 * u01(gen);
    cfg.thermal.dtw_max = cfg.thermal.dtw_min + 20.0 * u01(gen);
    cfg.thermal.dta_min = 15.0 + 10.0 * u01(gen);
    cfg.thermal.dta_max = cfg.thermal.dta_min + 10.0 * u01(gen);
    cfg.thermal.zeta = 0.05;
    cfg.thermal.coupling = u01(gen) < 0.5 ? CouplingMode::stochastic : CouplingMode::k_coupled;
    cfg.aging = {65000.0, 0.25};
    cfg.seed = gen();
    return cfg;
}

// Independent re-evaluation of the per-tick pipeline from the trace inputs.
void check_trace_against_brute_force(const SimulationResult& result, const SimConfig& cfg) {
    double cum = 0.0;
    for (const auto& t : result.ticks) {
        const double k = t.current / cfg.load.i_rated;
        const double ths = t.dto + t.dtw + t.dta;
        const double f = std::exp(15000.0 / 383.0 - 15000.0 / (ths + 273.0));
        cum += f * cfg.aging.dt_hours;
        const double pct = cum / cfg.aging.k_rtl * 100.0;
        CHECK(t.k == doctest::Approx(k).epsilon(1e-9));
        CHECK(t.t_hs == doctest::Approx(ths).epsilon(1e-9));
        CHECK(t.faa == doctest::Approx(f).epsilon(1e-9));
        CHECK(t.cum_life == doctest::Approx(cum).epsilon(1e-9));
        CHECK(t.rol == doctest::Approx(pct).epsilon(1e-9));
    }
}

}  // namespace

TEST_CASE("degenerate 110 degC config consumes real time one-for-one") {
    // 4 ticks of 15 minutes
    auto cfg = degenerate_110(15, 1);
    const auto result = run(cfg);
    REQUIRE(result.ticks.size() == 35040);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(result.ticks[i].faa == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(result.ticks[3].cum_life == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.feqa == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("same config runs identically") {
    std::mt19937 gen(77);
    const auto cfg = random_config(gen);
    const auto a = run(cfg);
    const auto b = run(cfg);
    REQUIRE(a.ticks.size() == b.ticks.size());
    for (std::size_t i = 0; i < a.ticks.size(); ++i) {
        CHECK(a.ticks[i].current == b.ticks[i].current);
        CHECK(a.ticks[i].cum_life == b.ticks[i].cum_life);
    }
    CHECK(a.feqa == b.feqa);
    CHECK(a.filtered_k_count == b.filtered_k_count);
}

TEST_CASE("trace matches the brute-force per-tick oracle") {
    std::mt19937 gen(101);
    for (int trial = 0; trial < 5; ++trial) {
        auto cfg = random_config(gen);
        const auto result = run(cfg);
        CHECK(result.ticks.size() == static_cast<std::size_t>(tick_count(cfg.tick)));
        check_trace_against_brute_force(result, cfg);
        CHECK(result.rol_final == result.ticks.back().rol);
    }
}

TEST_CASE("life summary is independent of replicate order") {
    std::mt19937 gen(55);
    auto cfg = random_config(gen);
    cfg.replicates = 4;
    const auto ens = run(cfg);
    // recompute the replicate finals one at a time, in reverse
    std::vector<double> finals;
    for (int r = cfg.replicates - 1; r >= 0; --r) {
        SimConfig one = cfg;
        one.replicates = 1;
        one.seed = cfg.seed + static_cast<std::uint64_t>(r);
        finals.push_back(run(one).ticks.back().cum_life);
    }
    const auto summary = life_summary(finals);
    CHECK(ens.life_summary.mean == doctest::Approx(summary.mean).epsilon(1e-12));
    CHECK(ens.life_summary.min == summary.min);
    CHECK(ens.life_summary.max == summary.max);
}

TEST_CASE("config validation catches dt mismatch and bad replicate count") {
    auto cfg = degenerate_110(15, 1);
    cfg.aging.dt_hours = 1.0;
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
    cfg = degenerate_110(15, 1);
    cfg.replicates = 0;
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("bench rows are ascending with positive times") {
    auto cfg = degenerate_110(60, 1);
    const auto one = bench(cfg, {1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].wall_seconds > 0.0);

    const auto rows = bench(cfg, {4, 1, 2});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].years == 1);
    CHECK(rows[1].years == 2);
    CHECK(rows[2].years == 4);
    CHECK_THROWS_AS(bench(cfg, {}), std::invalid_argument);
    CHECK_THROWS_AS(bench(cfg, {0}), std::invalid_argument);
}

TEST_CASE("polyfit interpolates when points equal terms") {
    const std::vector<double> xs{0, 1, 2, 3};
    const std::vector<double> ys{1, 2, 9, 28};  // x^3 + 1
    const auto fit = polyfit(xs, ys, 3);
    REQUIRE(fit.coefficients.size() == 4);
    CHECK(fit.coefficients[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.coefficients[3] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.rmse <= 1e-9);
    CHECK_FALSE(fit.dof_normalized);
}

TEST_CASE("polyfit recovers an exact line") {
    const std::vector<double> xs{1, 2, 3, 4, 5};
    const std::vector<double> ys{3, 5, 7, 9, 11};  // 2x + 1
    const auto fit = polyfit(xs, ys, 1);
    CHECK(fit.coefficients[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit.coefficients[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.rmse == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.dof_normalized);
}

TEST_CASE("polyfit residuals are orthogonal to the basis") {
    std::mt19937 gen(202);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::vector<double> xs, ys;
    for (int i = 0; i < 40; ++i) {
        xs.push_back(static_cast<double>(i) / 4.0);
        ys.push_back(u(gen));
    }
    const int degree = 3;
    const auto fit = polyfit(xs, ys, degree);
    for (int p = 0; p <= degree; ++p) {
        double dot = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double yhat = 0.0;
            for (int q = degree; q >= 0; --q) {
                yhat = yhat * xs[i] + fit.coefficients[static_cast<std::size_t>(q)];
            }
            const double basis = std::pow(xs[i], p);
            dot += (ys[i] - yhat) * basis;
            scale += std::abs(ys[i] * basis);
        }
        CHECK(std::abs(dot) <= 1e-6 * std::max(scale, 1.0));
    }
}

TEST_CASE("polyfit rejects degenerate systems") {
    CHECK_THROWS_AS(polyfit({1, 1, 2, 3}, {1, 2, 3, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(polyfit({1, 2}, {1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(polyfit({1, 2, 3}, {1, 2}, 1), std::invalid_argument);
}
