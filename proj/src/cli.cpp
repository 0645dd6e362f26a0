#include "splitwave/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "splitwave/errors.hpp"
#include "splitwave/spectral.hpp"

namespace splitwave {

namespace {

using nlohmann::json;

double elapsed_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::ofstream open_output(const RunConfig& config, const std::string& name) {
    std::filesystem::path dir(config.output_directory);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / name);
    if (!out) throw config_error("cannot write output file: " + (dir / name).string());
    return out;
}

//----------------------------------------------------------------------------
// Shared pieces
//----------------------------------------------------------------------------

// Non-dissipative symbols may be run, but only deliberately: the config must
// carry acknowledge_growth, and the allowance is threaded to every flow.
bool growth_allowance(const RunConfig& config, const DispersionSymbol& symbol,
                      const PeriodicGrid& grid, std::ostream& out) {
    const DissipativityReport report = validate_dissipativity(symbol, grid, false);
    if (report.pass) return false;
    if (!config.acknowledge_growth)
        throw validation_error(
            "symbol amplifies mode " + std::to_string(report.worst_mode) +
            " on this grid; set equation.acknowledge_growth to run anyway");
    out << "note: symbol amplifies " << report.violating_modes.size()
        << " mode(s); proceeding under acknowledge_growth\n";
    return true;
}

StudySpec study_from(const RunConfig& config, bool allow_growth) {
    StudySpec spec;
    spec.preset = preset_from(config);
    spec.grid_n = config.grid_n;
    spec.grid_length = config.grid_length;
    spec.initial = config.initial;
    spec.r = config.r;
    spec.T = config.T;
    spec.dt_list = config.dt_list;
    spec.scheme = config.scheme;
    spec.ref_dt = config.ref_dt;
    if (spec.ref_dt <= 0.0 && !config.dt_list.empty())
        spec.ref_dt = config.dt_list.back() / 64.0;
    spec.burgers = config.burgers;
    spec.allow_growth = allow_growth;
    spec.floor_override = config.floor_override;
    spec.output_directory = config.output_directory;
    return spec;
}

double row_wallclock(const RunConfig& config, double measured) {
    // Zero unless timings were opted into: wallclock depends on machine load,
    // and the files are promised to be byte-identical across reruns.
    return config.record_wallclock ? measured : 0.0;
}

void write_convergence_csv(const RunConfig& config, const std::string& name,
                           const ConvergenceTable& table) {
    if (!config.formats.contains("csv")) return;
    auto out = open_output(config, name);
    out << "dt,err_hr,err_hq,err_l2,wallclock_s\n";
    for (const auto& row : table.rows)
        out << format_double(row.dt) << ',' << format_double(row.err_hr) << ','
            << format_double(row.err_hq) << ',' << format_double(row.err_l2)
            << ',' << format_double(row_wallclock(config, row.wallclock_s))
            << '\n';
}

void write_loglog(const RunConfig& config, const std::string& name,
                  const ConvergenceTable& table, bool hr_column) {
    if (!config.formats.contains("dat")) return;
    auto out = open_output(config, name);
    for (const auto& row : table.rows) {
        const double err = hr_column ? row.err_hr : row.err_hq;
        out << format_double(std::log10(row.dt)) << ' '
            << format_double(std::log10(err)) << '\n';
    }
}

json table_report(const RunConfig& config, const ConvergenceTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"dt", row.dt},
                        {"err_hr", row.err_hr},
                        {"err_hq", row.err_hq},
                        {"err_l2", row.err_l2},
                        {"wallclock_s", row_wallclock(config, row.wallclock_s)},
                        {"admissible_hr", row.admissible_hr},
                        {"admissible_hq", row.admissible_hq},
                        {"guard_violation", row.guard_violation},
                        {"guard_reason", row.guard_reason}});
    }
    json traces = json::array();
    for (size_t i = 0; i < table.trajectories.size(); ++i) {
        const Trajectory& t = table.trajectories[i];
        traces.push_back({{"dt", table.rows[i].dt},
                          {"time", t.times},
                          {"h_r", t.h_r},
                          {"h_q", t.h_q},
                          {"h_p", t.h_p},
                          {"l_inf", t.l_inf}});
    }
    return json{{"config", config.raw},
                {"indices",
                 {{"r", table.indices.r},
                  {"ell", table.indices.ell},
                  {"q", table.indices.q},
                  {"p", table.indices.p}}},
                {"reference",
                 {{"ref_dt", table.ref_dt},
                  {"self_convergence_delta", table.self_delta},
                  {"floor", table.floor},
                  {"note", "floor = 100 * self_convergence_delta; rows below "
                           "it are excluded from the fit"}}},
                {"fit",
                 {{"order_hr", table.fit_hr.slope},
                  {"residual_hr", table.fit_hr.residual},
                  {"order_hq", table.fit_hq.slope},
                  {"residual_hq", table.fit_hq.residual}}},
                {"under_resolved", table.under_resolved},
                {"rows", rows},
                {"traces", traces}};
}

void write_report(const RunConfig& config, const std::string& name,
                  const json& report) {
    if (!config.formats.contains("json")) return;
    auto out = open_output(config, name);
    out << report.dump(2) << '\n';
}

void print_fit(std::ostream& out, const ConvergenceTable& table) {
    out << "fitted_order_hr = " << format_double(table.fit_hr.slope)
        << " (max log deviation " << format_double(table.fit_hr.residual) << ")\n"
        << "fitted_order_hq = " << format_double(table.fit_hq.slope)
        << " (max log deviation " << format_double(table.fit_hq.residual) << ")\n"
        << "reference: ref_dt = " << format_double(table.ref_dt)
        << ", self_convergence_delta = " << format_double(table.self_delta)
        << ", floor = " << format_double(table.floor) << '\n';
    if (table.under_resolved)
        out << "under-resolved: too many rows fell below the reference floor\n";
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

//----------------------------------------------------------------------------
// validate
//----------------------------------------------------------------------------

int cmd_validate(const RunConfig& config, std::ostream& out) {
    const EquationPreset preset = preset_from(config);
    const PeriodicGrid grid(config.grid_n, config.grid_length);
    const auto values = symbol_values(preset.symbol, grid);

    int max_re_bin = 0, min_re_bin = 0, max_im_bin = 0;
    for (int i = 0; i < grid.size(); ++i) {
        if (values[i].real() > values[max_re_bin].real()) max_re_bin = i;
        if (values[i].real() < values[min_re_bin].real()) min_re_bin = i;
        if (std::abs(values[i].imag()) > std::abs(values[max_im_bin].imag()))
            max_im_bin = i;
    }
    out << "preset " << preset.name << ", degree " << preset.symbol.degree()
        << ", grid n = " << grid.size() << ", L = " << format_double(grid.length())
        << "\nsymbol extremes:\n";
    auto print_row = [&](int bin, const char* label) {
        out << "  mode " << grid.mode_of_bin(bin)
            << ": Re P(ik) = " << format_double(values[bin].real())
            << ", Im P(ik) = " << format_double(values[bin].imag()) << "  ("
            << label << ")\n";
    };
    print_row(max_re_bin, "largest real part");
    print_row(min_re_bin, "smallest real part");
    print_row(max_im_bin, "largest imaginary magnitude");

    const DissipativityReport report =
        validate_dissipativity(preset.symbol, grid, false);
    if (report.pass) {
        out << "dissipativity: PASS (max Re P(ik) above tolerance: none)\n";
    } else {
        out << "dissipativity: FAIL at " << report.violating_modes.size()
            << " mode(s):";
        for (int m : report.violating_modes) out << ' ' << m;
        out << "\n  worst mode " << report.worst_mode
            << " with Re P(ik) = " << format_double(report.max_positive_real)
            << '\n';
    }

    const Field u0 = make_field(config.initial, grid);
    out << "shock_time(u0) = " << format_double(shock_time(u0)) << '\n';
    const SobolevIndices idx = indices_for(config.r, preset.symbol.degree());
    out << "indices: r = " << idx.r << ", q = " << idx.q << ", p = " << idx.p
        << '\n';
    return report.pass ? 0 : 2;
}

//----------------------------------------------------------------------------
// run
//----------------------------------------------------------------------------

int cmd_run(const RunConfig& config, std::ostream& out) {
    if (!(config.dt > 0.0)) throw config_error("scheme.dt is required for run");
    const long steps = std::llround(config.T / config.dt);
    if (steps < 1 ||
        std::abs(steps * config.dt - config.T) > 1e-12 * std::max(config.T, 1.0))
        throw config_error("scheme.dt must divide scheme.T");

    const EquationPreset preset = preset_from(config);
    const PeriodicGrid grid(config.grid_n, config.grid_length);
    const bool allow = growth_allowance(config, preset.symbol, grid, out);
    const Field u0 = make_field(config.initial, grid);

    StepPlan plan;
    plan.scheme = config.scheme;
    plan.dt = config.dt;
    plan.steps = steps;
    plan.indices = indices_for(config.r, preset.symbol.degree());
    plan.burgers = config.burgers;
    plan.allow_growth = allow;

    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory trajectory = evolve(u0, plan, preset.symbol);
    const double wallclock = elapsed_seconds(t0);

    if (config.formats.contains("csv")) {
        auto csv = open_output(config, "trace.csv");
        csv << "step,time,hr,hq,hp,linf\n";
        for (size_t k = 0; k < trajectory.times.size(); ++k)
            csv << k << ',' << format_double(trajectory.times[k]) << ','
                << format_double(trajectory.h_r[k]) << ','
                << format_double(trajectory.h_q[k]) << ','
                << format_double(trajectory.h_p[k]) << ','
                << format_double(trajectory.l_inf[k]) << '\n';
    }
    if (config.formats.contains("dat")) {
        auto dat = open_output(config, "final_field.dat");
        const Field& final = trajectory.final_field();
        for (int j = 0; j < grid.size(); ++j)
            dat << format_double(grid.node(j)) << ' '
                << format_double(final.samples()[j]) << '\n';
    }

    if (trajectory.aborted) {
        out << "aborted at step " << trajectory.abort_step << " of " << steps
            << ": " << trajectory.abort_reason
            << "\n  shock_time = " << format_double(trajectory.abort_shock_time)
            << ", H^q = " << format_double(trajectory.abort_hq)
            << ", wallclock_s = " << format_double(wallclock) << '\n';
        return 3;
    }
    out << "steps = " << steps
        << ", final H^r = " << format_double(trajectory.h_r.back())
        << ", H^q = " << format_double(trajectory.h_q.back())
        << ", H^p = " << format_double(trajectory.h_p.back())
        << ", Linf = " << format_double(trajectory.l_inf.back())
        << ", wallclock_s = " << format_double(wallclock) << '\n';
    return 0;
}

//----------------------------------------------------------------------------
// converge / local-error
//----------------------------------------------------------------------------

int cmd_converge(const RunConfig& config, std::ostream& out) {
    if (config.dt_list.empty())
        throw config_error("scheme.dt_list or scheme.dt_divisors is required "
                           "for converge");
    const EquationPreset preset = preset_from(config);
    const PeriodicGrid grid(config.grid_n, config.grid_length);
    const bool allow = growth_allowance(config, preset.symbol, grid, out);

    const StudySpec spec = study_from(config, allow);
    const ConvergenceTable table = run_convergence(spec);

    write_convergence_csv(config, "convergence.csv", table);
    write_loglog(config, "loglog_hr.dat", table, true);
    write_loglog(config, "loglog_hq.dat", table, false);
    write_report(config, "report.json", table_report(config, table));
    print_fit(out, table);
    return table.under_resolved ? 2 : 0;
}

int cmd_local_error(const RunConfig& config, std::ostream& out) {
    if (config.dt_list.empty())
        throw config_error("scheme.dt_list or scheme.dt_divisors is required "
                           "for local-error");
    const EquationPreset preset = preset_from(config);
    const PeriodicGrid grid(config.grid_n, config.grid_length);
    // The probe's reference runs without a growth allowance; amplifying
    // symbols have no trustworthy yardstick here.
    validate_dissipativity(preset.symbol, grid, true);

    const Field u0 = make_field(config.initial, grid);
    const ConvergenceTable table = local_error_probe(
        u0, config.dt_list, preset.symbol, config.r, config.burgers);

    write_convergence_csv(config, "local_error.csv", table);
    write_loglog(config, "local_loglog_hr.dat", table, true);
    write_loglog(config, "local_loglog_hq.dat", table, false);
    write_report(config, "local_report.json", table_report(config, table));
    print_fit(out, table);
    return table.under_resolved ? 2 : 0;
}

//----------------------------------------------------------------------------
// commutator-check
//----------------------------------------------------------------------------

namespace {

double relative_route_gap(const CommutatorPair& pair) {
    const double scale =
        std::max(linf_norm(pair.direct), linf_norm(pair.expanded));
    if (scale == 0.0) return 0.0;
    return linf_norm(subtract(pair.direct, pair.expanded)) / scale;
}

}  // namespace

int cmd_commutator_check(const RunConfig& config, std::ostream& out) {
    const PeriodicGrid grid(config.grid_n, config.grid_length);
    const int single_band = grid.size() / 4;
    const int double_band = grid.size() / 6;
    if (double_band < 1)
        throw config_error("grid too small for the commutator band limits");

    const std::vector<EquationPreset> presets = {
        make_preset("viscous-burgers"), make_preset("kdv"),
        make_preset("benney-lin", config.beta), make_preset("kawahara")};

    auto random_field = [&](std::uint64_t seed, int band) {
        InitialCondition ic;
        ic.family = InitialCondition::Family::random_bandlimited;
        ic.amplitude = 1.0;
        ic.max_mode = band;
        ic.seed = seed;
        return make_field(ic, grid);
    };

    double overall_worst = 0.0;
    for (const auto& preset : presets) {
        double single_worst = 0.0;
        // One constant field rides along: both routes must return exactly 0.
        const Field constant =
            Field::from_samples(grid, std::vector<double>(grid.size(), 0.7));
        single_worst = std::max(
            single_worst, relative_route_gap(commutator(
                              constant, preset.symbol, config.commutator_corrupt)));
        for (int i = 0; i < config.commutator_single_fields; ++i) {
            const Field v = random_field(config.commutator_seed + i, single_band);
            single_worst = std::max(
                single_worst, relative_route_gap(commutator(
                                  v, preset.symbol, config.commutator_corrupt)));
        }
        double double_worst = 0.0;
        for (int i = 0; i < config.commutator_double_fields; ++i) {
            const Field v =
                random_field(config.commutator_seed + 1000 + i, double_band);
            double_worst = std::max(
                double_worst, relative_route_gap(double_commutator(
                                  v, preset.symbol, config.commutator_corrupt)));
        }
        out << "  " << preset.name << ": single worst rel "
            << format_double(single_worst) << " ("
            << config.commutator_single_fields + 1 << " fields), double worst rel "
            << format_double(double_worst) << " ("
            << config.commutator_double_fields << " fields)\n";
        overall_worst = std::max(overall_worst, std::max(single_worst, double_worst));
    }
    const bool pass = overall_worst <= 1e-8;
    out << (pass ? "PASS" : "FAIL") << ": worst relative route disagreement "
        << format_double(overall_worst) << '\n';
    return pass ? 0 : 2;
}

}  // namespace splitwave
