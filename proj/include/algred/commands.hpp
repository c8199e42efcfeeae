#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "algred/scenario.hpp"

#include "json.hpp"

namespace algred {

struct CommandOptions {
    std::optional<unsigned> degree;          // overrides the scenario degree
    std::optional<std::string> class_expr;   // quantize/kernel: extra requested class
    uint64_t seed = 0;                       // verify
    std::string suite = "all";               // verify
};

/// Deterministic JSON reports: sorted keys, canonical polynomial strings,
/// exact scalars as strings.
nlohmann::json cmd_reduce(const Scenario& sc, const CommandOptions& opts);
nlohmann::json cmd_quantize(const Scenario& sc, const CommandOptions& opts);
nlohmann::json cmd_kernel(const Scenario& sc, const CommandOptions& opts);
nlohmann::json cmd_isotypic(const Scenario& sc, const CommandOptions& opts);
nlohmann::json cmd_verify(const Scenario& sc, const CommandOptions& opts);

/// Dispatch by command name (reduce, quantize, kernel, isotypic, verify).
nlohmann::json run_command(const std::string& command, const Scenario& sc,
                           const CommandOptions& opts);

/// True when a verify report contains a failing property (CLI exit 3).
bool report_has_property_failure(const nlohmann::json& report);

}  // namespace algred
