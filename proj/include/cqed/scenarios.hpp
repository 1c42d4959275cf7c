// scenarios.hpp — scenario configs in, result tables out. One scenario per
// figure/result family; the CLI front end is a thin wrapper over run_scenario.
//
// Frequencies in a config are in multiples of frequency_unit (rad/s per
// unit) and times in its inverse; the engine is unit-consistent, so the unit
// is recorded in the output header rather than converted.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cqed/table.hpp"

namespace cqed {

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;  // >= 2
};

std::vector<double> linspace(const GridSpec& g);

enum class ParamKind { number, integer, toggle, text };

struct ParamSpec {
    std::string name;
    ParamKind kind;
    double def = 0.0;
    std::string text_def;
    std::string help;
};

struct GridDef {
    std::string name;
    GridSpec def;
    bool computed_default = false;  // default derived from other params at run time
    std::string help;
};

struct ScenarioSpec {
    std::string name;
    std::string help;
    std::vector<ParamSpec> params;
    std::vector<GridDef> grids;
    bool has_cross_check = false;
};

const std::vector<ScenarioSpec>& scenario_registry();
const ScenarioSpec* find_scenario(const std::string& name);

struct ScenarioConfig {
    std::string scenario;
    double frequency_unit = 1.0;
    std::map<std::string, double> numbers;
    std::map<std::string, std::string> texts;
    std::map<std::string, GridSpec> grids;
    bool cross_check = false;
    int jobs = 0;
};

// Parses the self-describing JSON config document. Unknown scenarios or keys
// throw std::invalid_argument listing what is accepted.
ScenarioConfig config_from_json_text(const std::string& text);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

// Structural + physical validation without running any solver.
ValidationReport validate_scenario(const ScenarioConfig& cfg);

// Runs the scenario and returns the result table. Throws
// std::invalid_argument for config-level problems and solver errors
// propagate as-is.
Table run_scenario(const ScenarioConfig& cfg);

}  // namespace cqed
