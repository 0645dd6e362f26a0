#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "splitwave/harness.hpp"

namespace splitwave {

// Parsed form of the declarative run configuration. Every key has a default;
// unknown or misplaced keys are config errors with their full path, never
// silently ignored. `raw` keeps the effective JSON (after --set overrides)
// for echoing into reports.
struct RunConfig {
    std::string preset_name = "kdv";
    double beta = 0.5;
    bool acknowledge_growth = false;

    int grid_n = 256;
    double grid_length = 2.0 * pi;

    InitialCondition initial;

    Scheme scheme = Scheme::strang;
    double dt = 0.0;               // single-run step; 0 when unset
    std::vector<double> dt_list;   // explicit step list for studies
    double T = 1.0;
    int r = 1;

    BurgersSolveOptions burgers;

    double ref_dt = 0.0;           // 0 derives dt_min/64
    double floor_override = 0.0;   // testing knob, see harness

    int commutator_single_fields = 20;
    int commutator_double_fields = 10;
    std::uint64_t commutator_seed = 1234;
    bool commutator_corrupt = false;

    std::string output_directory = "out";
    std::set<std::string> formats = {"csv", "json", "dat"};
    bool record_wallclock = false;

    nlohmann::json raw;
};

RunConfig parse_config(const nlohmann::json& j);

// Reads the file, applies dotted-path overrides ("scheme.dt=1e-3"), parses.
RunConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides);

// Equation preset resolved from the config's equation block.
EquationPreset preset_from(const RunConfig& config);

}  // namespace splitwave
