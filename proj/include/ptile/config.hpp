#pragma once

#include <stdexcept>
#include <string>

#include "ptile/engine.hpp"

namespace ptile {

/// Bad key, missing key, parse failure or invariant violation in a config
/// file; the message carries the key name and line number where applicable.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses line-oriented "key = value" text into a validated SimConfig.
/// Blank lines and lines starting with '#' are ignored. Unknown keys are an
/// error. Optional keys: zeta (0.05), coupling (stochastic), k_rtl (65000),
/// replicates (1); everything else is required.
[[nodiscard]] SimConfig parse_config(const std::string& text);

/// Renders a SimConfig back to config-file text; parse_config of the output
/// reproduces the input.
[[nodiscard]] std::string serialize_config(const SimConfig& cfg);

}  // namespace ptile
