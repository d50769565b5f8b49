#include "ptile/config.hpp"

#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "ptile/format.hpp"

namespace ptile {

namespace {

const std::set<std::string> kKnownKeys = {
    "interval_minutes", "horizon_years", "i_rated", "i_min", "i_max", "k_min",
    "k_max", "generator_kind", "dto_min", "dto_max", "dtw_min", "dtw_max",
    "dta_min", "dta_max", "zeta", "coupling", "k_rtl", "seed", "replicates"};

const std::set<std::string> kOptionalKeys = {"zeta", "coupling", "k_rtl", "replicates"};

struct Entry {
    std::string value;
    int line = 0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& msg, int line) {
    throw ConfigError(msg + " (line " + std::to_string(line) + ")");
}

double parse_real(const std::string& key, const Entry& e) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail("key '" + key + "': cannot parse real value '" + e.value + "'", e.line);
    }
}

long long parse_int(const std::string& key, const Entry& e) {
    long long v = 0;
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        fail("key '" + key + "': cannot parse integer value '" + e.value + "'", e.line);
    }
    return v;
}

}  // namespace

SimConfig parse_config(const std::string& text) {
    std::map<std::string, Entry> entries;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail("expected 'key = value', got '" + line + "'", lineno);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (kKnownKeys.find(key) == kKnownKeys.end()) {
            fail("unknown key '" + key + "'", lineno);
        }
        if (entries.count(key)) {
            fail("duplicate key '" + key + "'", lineno);
        }
        if (value.empty()) {
            fail("key '" + key + "' has no value", lineno);
        }
        entries[key] = {value, lineno};
    }
    for (const auto& key : kKnownKeys) {
        if (!entries.count(key) && !kOptionalKeys.count(key)) {
            throw ConfigError("missing required key '" + key + "'");
        }
    }

    auto real_of = [&](const char* key) { return parse_real(key, entries.at(key)); };
    auto int_of = [&](const char* key) { return parse_int(key, entries.at(key)); };

    SimConfig cfg;
    cfg.tick.interval_minutes = static_cast<int>(int_of("interval_minutes"));
    cfg.tick.horizon_years = static_cast<int>(int_of("horizon_years"));
    cfg.load.i_rated = real_of("i_rated");
    cfg.load.i_min = real_of("i_min");
    cfg.load.i_max = real_of("i_max");
    cfg.load.k_min = real_of("k_min");
    cfg.load.k_max = real_of("k_max");
    cfg.thermal.dto_min = real_of("dto_min");
    cfg.thermal.dto_max = real_of("dto_max");
    cfg.thermal.dtw_min = real_of("dtw_min");
    cfg.thermal.dtw_max = real_of("dtw_max");
    cfg.thermal.dta_min = real_of("dta_min");
    cfg.thermal.dta_max = real_of("dta_max");
    cfg.seed = static_cast<std::uint64_t>(int_of("seed"));

    {
        const auto& e = entries.at("generator_kind");
        if (e.value == "uniform_random") {
            cfg.load.generator_kind = GeneratorKind::uniform_random;
        } else if (e.value == "linear_step") {
            cfg.load.generator_kind = GeneratorKind::linear_step;
        } else {
            fail("key 'generator_kind': expected uniform_random or linear_step, got '" +
                     e.value + "'",
                 e.line);
        }
    }
    if (entries.count("coupling")) {
        const auto& e = entries.at("coupling");
        if (e.value == "stochastic") {
            cfg.thermal.coupling = CouplingMode::stochastic;
        } else if (e.value == "k_coupled") {
            cfg.thermal.coupling = CouplingMode::k_coupled;
        } else {
            fail("key 'coupling': expected stochastic or k_coupled, got '" + e.value + "'",
                 e.line);
        }
    }
    cfg.thermal.zeta = entries.count("zeta") ? real_of("zeta") : 0.05;
    cfg.aging.k_rtl = entries.count("k_rtl") ? real_of("k_rtl") : 65000.0;
    cfg.replicates = entries.count("replicates") ? static_cast<int>(int_of("replicates")) : 1;
    cfg.aging.dt_hours = static_cast<double>(cfg.tick.interval_minutes) / 60.0;

    if (cfg.load.i_min > cfg.load.i_max) {
        throw ConfigError("invariant violation: i_min > i_max");
    }
    try {
        validate(cfg);
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(std::string("invariant violation: ") + ex.what());
    }
    return cfg;
}

std::string serialize_config(const SimConfig& cfg) {
    std::ostringstream out;
    out << "interval_minutes = " << cfg.tick.interval_minutes << "\n"
        << "horizon_years = " << cfg.tick.horizon_years << "\n"
        << "i_rated = " << format_real(cfg.load.i_rated) << "\n"
        << "i_min = " << format_real(cfg.load.i_min) << "\n"
        << "i_max = " << format_real(cfg.load.i_max) << "\n"
        << "k_min = " << format_real(cfg.load.k_min) << "\n"
        << "k_max = " << format_real(cfg.load.k_max) << "\n"
        << "generator_kind = "
        << (cfg.load.generator_kind == GeneratorKind::uniform_random ? "uniform_random"
                                                                     : "linear_step")
        << "\n"
        << "dto_min = " << format_real(cfg.thermal.dto_min) << "\n"
        << "dto_max = " << format_real(cfg.thermal.dto_max) << "\n"
        << "dtw_min = " << format_real(cfg.thermal.dtw_min) << "\n"
        << "dtw_max = " << format_real(cfg.thermal.dtw_max) << "\n"
        << "dta_min = " << format_real(cfg.thermal.dta_min) << "\n"
        << "dta_max = " << format_real(cfg.thermal.dta_max) << "\n"
        << "zeta = " << format_real(cfg.thermal.zeta) << "\n"
        << "coupling = "
        << (cfg.thermal.coupling == CouplingMode::stochastic ? "stochastic" : "k_coupled")
        << "\n"
        << "k_rtl = " << format_real(cfg.aging.k_rtl) << "\n"
        << "seed = " << cfg.seed << "\n"
        << "replicates = " << cfg.replicates << "\n";
    return out.str();
}

}  // namespace ptile
