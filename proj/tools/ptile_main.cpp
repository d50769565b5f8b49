#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptile/config.hpp"
#include "ptile/csv_io.hpp"
#include "ptile/engine.hpp"
#include "ptile/format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ptile::ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ptile::SimConfig load_config(const std::string& path, std::optional<long long> seed_override) {
    auto cfg = ptile::parse_config(read_file(path));
    if (seed_override) {
        cfg.seed = static_cast<std::uint64_t>(*seed_override);
    }
    return cfg;
}

std::vector<int> parse_year_list(const std::string& csv) {
    std::vector<int> years;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        years.push_back(std::stoi(tok));
    }
    if (years.empty()) {
        throw ptile::ConfigError("--years list is empty");
    }
    return years;
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 std::optional<long long> seed_override) {
    const auto cfg = load_config(config_path, seed_override);
    const auto result = ptile::run(cfg);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    ptile::write_trace(result, out);
    ptile::write_summary(result, std::nullopt, std::cout);
    return kExitOk;
}

int cmd_bench(const std::string& config_path, const std::string& years_csv,
              const std::string& out_path) {
    const auto cfg = load_config(config_path, std::nullopt);
    const auto rows = ptile::bench(cfg, parse_year_list(years_csv));
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + out_path);
        }
        ptile::write_bench(rows, out);
    } else {
        ptile::write_bench(rows, std::cout);
    }
    if (rows.size() >= 4) {
        std::vector<double> xs, ys;
        for (const auto& row : rows) {
            xs.push_back(static_cast<double>(row.years));
            ys.push_back(row.wall_seconds);
        }
        const auto fit = ptile::polyfit(xs, ys, 3);
        std::cout << "fit_degree = 3\n";
        for (std::size_t p = 0; p < fit.coefficients.size(); ++p) {
            std::cout << "coeff_x" << p << " = " << ptile::format_real(fit.coefficients[p])
                      << "\n";
        }
        std::cout << "rmse = " << ptile::format_real(fit.rmse) << "\n"
                  << "rmse_normalization = " << (fit.dof_normalized ? "n_minus_terms" : "n")
                  << "\n";
    }
    return kExitOk;
}

int cmd_fit(const std::string& in_path, int degree) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + in_path);
    }
    std::vector<double> xs, ys;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("fit: expected 'x,y' rows, got '" + line + "'");
        }
        try {
            xs.push_back(std::stod(line.substr(0, comma)));
            ys.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            // header row or other non-numeric line
            if (!xs.empty()) {
                throw std::runtime_error("fit: cannot parse row '" + line + "'");
            }
        }
    }
    const auto fit = ptile::polyfit(xs, ys, degree);
    for (std::size_t p = 0; p < fit.coefficients.size(); ++p) {
        std::cout << "coeff_x" << p << " = " << ptile::format_real(fit.coefficients[p])
                  << "\n";
    }
    std::cout << "rmse = " << ptile::format_real(fit.rmse) << "\n"
              << "rmse_normalization = " << (fit.dof_normalized ? "n_minus_terms" : "n")
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transformer insulation aging simulator"};
    app.require_subcommand(1);

    std::string config_path, out_path, years_csv, fit_in;
    std::optional<long long> seed_override;
    int degree = 3;

    auto* simulate = app.add_subcommand("simulate", "Run a simulation and write the trace");
    simulate->add_option("--config", config_path, "Config file path")->required();
    simulate->add_option("--out", out_path, "Trace CSV output path")->required();
    simulate->add_option("--seed", seed_override, "Override the config seed");

    auto* bench = app.add_subcommand("bench", "Wall-clock scaling study");
    bench->add_option("--config", config_path, "Config file path")->required();
    bench->add_option("--years", years_csv, "Comma-separated horizon list")->required();
    bench->add_option("--out", out_path, "Benchmark CSV output path");

    auto* fit = app.add_subcommand("fit", "Least-squares polynomial fit of a CSV of x,y");
    fit->add_option("--in", fit_in, "Input CSV path")->required();
    fit->add_option("--degree", degree, "Polynomial degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(config_path, out_path, seed_override);
        }
        if (bench->parsed()) {
            return cmd_bench(config_path, years_csv, out_path);
        }
        return cmd_fit(fit_in, degree);
    } catch (const ptile::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}
