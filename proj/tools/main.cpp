#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitwave/cli.hpp"
#include "splitwave/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Operator-splitting solver for periodic equations "
                 "u_t = P(d/dx)u + u u_x"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    auto add_subcommand = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("config", config_path, "JSON run configuration")
            ->required();
        sub->add_option("--set", overrides,
                        "Override a config key, e.g. --set scheme.dt=1e-3");
        return sub;
    };
    CLI::App* validate = add_subcommand(
        "validate", "Print the symbol table, dissipativity verdict, shock time "
                    "and Sobolev indices");
    CLI::App* run = add_subcommand(
        "run", "Evolve the configured problem and write norm traces");
    CLI::App* converge = add_subcommand(
        "converge", "Run a convergence study over scheme.dt_list");
    CLI::App* local_error = add_subcommand(
        "local-error", "Measure one-step defects over scheme.dt_list");
    CLI::App* commutator_check = add_subcommand(
        "commutator-check", "Cross-check both commutator evaluation routes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const splitwave::RunConfig config =
            splitwave::load_config(config_path, overrides);
        if (validate->parsed()) return splitwave::cmd_validate(config, std::cout);
        if (run->parsed()) return splitwave::cmd_run(config, std::cout);
        if (converge->parsed()) return splitwave::cmd_converge(config, std::cout);
        if (local_error->parsed())
            return splitwave::cmd_local_error(config, std::cout);
        if (commutator_check->parsed())
            return splitwave::cmd_commutator_check(config, std::cout);
    } catch (const splitwave::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const splitwave::validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const splitwave::guard_error& e) {
        std::cerr << "guard violation: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
