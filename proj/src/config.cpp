#include "splitwave/config.hpp"

#include <fstream>

#include "splitwave/errors.hpp"

namespace splitwave {
namespace {

using nlohmann::json;

void check_keys(const json& block, const std::string& path,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : block.items()) {
        (void)value;
        if (!allowed.contains(key))
            throw config_error("unknown config key: " + path + key);
    }
}

double get_number(const json& block, const std::string& path,
                  const std::string& key, double fallback) {
    if (!block.contains(key)) return fallback;
    if (!block[key].is_number())
        throw config_error("config key " + path + key + " must be a number");
    return block[key].get<double>();
}

long get_integer(const json& block, const std::string& path,
                 const std::string& key, long fallback) {
    if (!block.contains(key)) return fallback;
    if (!block[key].is_number_integer())
        throw config_error("config key " + path + key + " must be an integer");
    return block[key].get<long>();
}

bool get_bool(const json& block, const std::string& path, const std::string& key,
              bool fallback) {
    if (!block.contains(key)) return fallback;
    if (!block[key].is_boolean())
        throw config_error("config key " + path + key + " must be a boolean");
    return block[key].get<bool>();
}

std::string get_string(const json& block, const std::string& path,
                       const std::string& key, const std::string& fallback) {
    if (!block.contains(key)) return fallback;
    if (!block[key].is_string())
        throw config_error("config key " + path + key + " must be a string");
    return block[key].get<std::string>();
}

const json& get_block(const json& j, const std::string& name) {
    static const json empty = json::object();
    if (!j.contains(name)) return empty;
    if (!j[name].is_object())
        throw config_error("config block " + name + " must be an object");
    return j[name];
}

void parse_equation(const json& j, RunConfig& config) {
    const json& block = get_block(j, "equation");
    check_keys(block, "equation.", {"preset", "beta", "acknowledge_growth"});
    config.preset_name = get_string(block, "equation.", "preset", config.preset_name);
    config.beta = get_number(block, "equation.", "beta", config.beta);
    config.acknowledge_growth =
        get_bool(block, "equation.", "acknowledge_growth", config.acknowledge_growth);
}

void parse_grid(const json& j, RunConfig& config) {
    const json& block = get_block(j, "grid");
    check_keys(block, "grid.", {"n", "length"});
    config.grid_n = static_cast<int>(get_integer(block, "grid.", "n", config.grid_n));
    config.grid_length = get_number(block, "grid.", "length", config.grid_length);
}

void parse_initial(const json& j, RunConfig& config) {
    const json& block = get_block(j, "initial");
    const std::string name = get_string(block, "initial.", "family", "sine");
    config.initial.family = InitialCondition::family_from_name(name);

    using Family = InitialCondition::Family;
    std::set<std::string> allowed{"family"};
    switch (config.initial.family) {
        case Family::sine:
            allowed.insert({"amplitude", "mode"});
            break;
        case Family::gaussian:
            allowed.insert({"amplitude", "width", "center"});
            break;
        case Family::soliton:
            allowed.insert({"c"});
            break;
        case Family::random_bandlimited:
            allowed.insert({"amplitude", "max_mode", "seed"});
            break;
    }
    check_keys(block, "initial.", allowed);

    config.initial.amplitude =
        get_number(block, "initial.", "amplitude", config.initial.amplitude);
    config.initial.mode =
        static_cast<int>(get_integer(block, "initial.", "mode", config.initial.mode));
    config.initial.width = get_number(block, "initial.", "width", config.initial.width);
    config.initial.center =
        get_number(block, "initial.", "center", config.initial.center);
    config.initial.speed = get_number(block, "initial.", "c", config.initial.speed);
    config.initial.max_mode = static_cast<int>(
        get_integer(block, "initial.", "max_mode", config.initial.max_mode));
    if (block.contains("seed")) {
        if (!block["seed"].is_number_unsigned() && !block["seed"].is_number_integer())
            throw config_error("config key initial.seed must be an integer");
        config.initial.seed = block["seed"].get<std::uint64_t>();
    }
}

void parse_scheme(const json& j, RunConfig& config) {
    const json& block = get_block(j, "scheme");
    check_keys(block, "scheme.",
               {"kind", "dt", "dt_list", "dt_divisors", "T", "r"});
    const std::string kind = get_string(block, "scheme.", "kind", "strang");
    if (kind == "strang")
        config.scheme = Scheme::strang;
    else if (kind == "lie")
        config.scheme = Scheme::lie;
    else
        throw config_error("scheme.kind must be \"strang\" or \"lie\"");

    config.T = get_number(block, "scheme.", "T", config.T);
    config.r = static_cast<int>(get_integer(block, "scheme.", "r", config.r));
    config.dt = get_number(block, "scheme.", "dt", config.dt);

    if (block.contains("dt_list") && block.contains("dt_divisors"))
        throw config_error("scheme.dt_list and scheme.dt_divisors are exclusive");
    if (block.contains("dt_list")) {
        if (!block["dt_list"].is_array())
            throw config_error("config key scheme.dt_list must be an array");
        config.dt_list.clear();
        for (const auto& v : block["dt_list"]) {
            if (!v.is_number())
                throw config_error("scheme.dt_list entries must be numbers");
            config.dt_list.push_back(v.get<double>());
        }
    }
    if (block.contains("dt_divisors")) {
        if (!block["dt_divisors"].is_array())
            throw config_error("config key scheme.dt_divisors must be an array");
        config.dt_list.clear();
        for (const auto& v : block["dt_divisors"]) {
            if (!v.is_number_integer() || v.get<long>() < 1)
                throw config_error(
                    "scheme.dt_divisors entries must be positive integers");
            config.dt_list.push_back(config.T / v.get<long>());
        }
    }
}

void parse_burgers(const json& j, RunConfig& config) {
    const json& block = get_block(j, "burgers");
    check_keys(block, "burgers.",
               {"method", "tolerance", "max_iterations", "safety_fraction",
                "rk_substeps"});
    const std::string method =
        get_string(block, "burgers.", "method", "characteristics");
    if (method == "characteristics")
        config.burgers.method = BurgersSolveOptions::Method::characteristics;
    else if (method == "spectral-rk4")
        config.burgers.method = BurgersSolveOptions::Method::spectral_rk4;
    else
        throw config_error(
            "burgers.method must be \"characteristics\" or \"spectral-rk4\"");
    config.burgers.tolerance =
        get_number(block, "burgers.", "tolerance", config.burgers.tolerance);
    config.burgers.max_iterations = static_cast<int>(get_integer(
        block, "burgers.", "max_iterations", config.burgers.max_iterations));
    config.burgers.safety_fraction = get_number(
        block, "burgers.", "safety_fraction", config.burgers.safety_fraction);
    config.burgers.rk_substeps = static_cast<int>(
        get_integer(block, "burgers.", "rk_substeps", config.burgers.rk_substeps));
    if (!(config.burgers.tolerance > 0.0))
        throw config_error("burgers.tolerance must be positive");
    if (config.burgers.max_iterations < 1)
        throw config_error("burgers.max_iterations must be at least 1");
    if (!(config.burgers.safety_fraction > 0.0 &&
          config.burgers.safety_fraction < 1.0))
        throw config_error("burgers.safety_fraction must lie in (0, 1)");
}

void parse_reference(const json& j, RunConfig& config) {
    const json& block = get_block(j, "reference");
    check_keys(block, "reference.", {"dt", "floor_override"});
    config.ref_dt = get_number(block, "reference.", "dt", config.ref_dt);
    config.floor_override =
        get_number(block, "reference.", "floor_override", config.floor_override);
}

void parse_commutator(const json& j, RunConfig& config) {
    const json& block = get_block(j, "commutator");
    check_keys(block, "commutator.",
               {"single_fields", "double_fields", "seed", "corrupt"});
    config.commutator_single_fields = static_cast<int>(get_integer(
        block, "commutator.", "single_fields", config.commutator_single_fields));
    config.commutator_double_fields = static_cast<int>(get_integer(
        block, "commutator.", "double_fields", config.commutator_double_fields));
    if (block.contains("seed")) {
        if (!block["seed"].is_number_unsigned() && !block["seed"].is_number_integer())
            throw config_error("config key commutator.seed must be an integer");
        config.commutator_seed = block["seed"].get<std::uint64_t>();
    }
    config.commutator_corrupt =
        get_bool(block, "commutator.", "corrupt", config.commutator_corrupt);
}

void parse_output(const json& j, RunConfig& config) {
    const json& block = get_block(j, "output");
    check_keys(block, "output.", {"directory", "formats", "record_wallclock"});
    config.output_directory =
        get_string(block, "output.", "directory", config.output_directory);
    if (block.contains("formats")) {
        if (!block["formats"].is_array())
            throw config_error("config key output.formats must be an array");
        config.formats.clear();
        for (const auto& v : block["formats"]) {
            if (!v.is_string())
                throw config_error("output.formats entries must be strings");
            const std::string f = v.get<std::string>();
            if (f != "csv" && f != "json" && f != "dat")
                throw config_error("output format must be csv, json, or dat: " + f);
            config.formats.insert(f);
        }
    }
    config.record_wallclock =
        get_bool(block, "output.", "record_wallclock", config.record_wallclock);
}

}  // namespace

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw config_error("config root must be an object");
    check_keys(j, "",
               {"equation", "grid", "initial", "scheme", "burgers", "reference",
                "commutator", "output"});
    RunConfig config;
    parse_equation(j, config);
    parse_grid(j, config);
    parse_initial(j, config);
    parse_scheme(j, config);
    parse_burgers(j, config);
    parse_reference(j, config);
    parse_commutator(j, config);
    parse_output(j, config);

    if (config.initial.family == InitialCondition::Family::soliton &&
        config.preset_name != "kdv")
        throw config_error(
            "the soliton initial condition is specific to the kdv preset");

    config.raw = j;
    return config;
}

RunConfig load_config(const std::string& path,
                      const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& err) {
        throw config_error("config is not valid JSON: " + std::string(err.what()));
    }

    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw config_error("override must look like key.path=value: " + item);
        const std::string dotted = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);

        json* node = &j;
        size_t start = 0;
        while (true) {
            const size_t dot = dotted.find('.', start);
            const std::string key = dotted.substr(
                start, dot == std::string::npos ? std::string::npos : dot - start);
            if (key.empty())
                throw config_error("override has an empty path segment: " + item);
            if (dot == std::string::npos) {
                json parsed = json::parse(value, nullptr, false);
                (*node)[key] = parsed.is_discarded() ? json(value) : parsed;
                break;
            }
            node = &(*node)[key];
            if (!node->is_object()) *node = json::object();
            start = dot + 1;
        }
    }
    return parse_config(j);
}

EquationPreset preset_from(const RunConfig& config) {
    return make_preset(config.preset_name, config.beta);
}

}  // namespace splitwave
