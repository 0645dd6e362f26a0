#pragma once

#include <string>
#include <vector>

#include "splitwave/initial_conditions.hpp"
#include "splitwave/splitting.hpp"

namespace splitwave {

// A complete, reproducible description of one convergence study.
struct StudySpec {
    EquationPreset preset = make_preset("kdv");
    int grid_n = 256;
    double grid_length = 2.0 * pi;
    InitialCondition initial;
    int r = 1;
    double T = 1.0;
    std::vector<double> dt_list;  // strictly decreasing, each dividing T
    Scheme scheme = Scheme::strang;
    double ref_dt = 0.0;
    BurgersSolveOptions burgers;
    bool allow_growth = false;
    double floor_override = 0.0;  // testing knob: replaces the computed floor
    std::string output_directory;
};

// Throws config_error on an ill-formed study: fewer than four dt values, a
// span under three octaves, nonmonotone dt, dt not dividing T to 1e-12, or a
// reference step coarser than dt_min/20.
void validate_study(const StudySpec& spec);

struct FitResult {
    double slope = 0.0;
    double residual = 0.0;  // max absolute deviation from the fit, log space
};

// Least squares of log(error) against log(dt). Throws config_error with
// fewer than three points.
FitResult fit_order(const std::vector<double>& dts,
                    const std::vector<double>& errors);

struct ConvergenceRow {
    double dt = 0.0;
    double err_hr = 0.0;
    double err_hq = 0.0;
    double err_l2 = 0.0;
    double wallclock_s = 0.0;
    bool admissible_hr = false;  // above the reference-accuracy floor
    bool admissible_hq = false;
    bool guard_violation = false;
    std::string guard_reason;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;  // in dt_list order
    FitResult fit_hr;
    FitResult fit_hq;
    double ref_dt = 0.0;
    double self_delta = 0.0;  // reference self-convergence distance in H^r
    double floor = 0.0;       // smallest trustworthy error, 100 * self_delta
    bool under_resolved = false;
    SobolevIndices indices{1, 3, 3, 6};
    std::vector<Trajectory> trajectories;  // aligned with rows; empty for probes
};

// Evolves every dt against a self-checked reference and fits the orders over
// the admissible rows. Rows run concurrently; the table is assembled in
// dt_list order, so the output is independent of scheduling.
ConvergenceTable run_convergence(const StudySpec& spec);

// One-step defect of the Strang composition against the reference flow over
// the same window, fitted the same way.
ConvergenceTable local_error_probe(const Field& u0,
                                   const std::vector<double>& dt_list,
                                   const DispersionSymbol& symbol, int r,
                                   const BurgersSolveOptions& burgers = {});

struct GrowthRun {
    std::vector<double> times;  // step count + 1 entries, t = 0 included
    std::vector<double> h_p;
    std::vector<double> h_q;
    double shock = 0.0;   // shock_time of this member's u0
    double alpha = 0.0;   // max H^q over the run
    double window = 0.0;  // common shock-fraction horizon used for c_run
    double c_run = 0.0;
};

struct GrowthReport {
    std::vector<GrowthRun> runs;
    int calibration_run = -1;       // smallest-shock member, source of c_fit
    double c_fit = 0.0;             // fitted over that member's full series
    double stability_factor = 1.0;  // max/min of the nonzero windowed c_run
    bool bound_holds = true;        // every series under exp(1.1 c_fit alpha t)
};

// Samples the exact Burgers flow of each family member at multiples of dt and
// fits the H^p growth-rate constant. The per-run constants are extracted over
// a common fraction of each member's shock time, the scaling-invariant way to
// compare members whose shocks arrive at different times; the reported c_fit
// comes from the full series of the most demanding member.
GrowthReport growth_check(const std::vector<Field>& family, double dt, double T,
                          const DispersionSymbol& symbol,
                          const SobolevIndices& indices,
                          const BurgersSolveOptions& burgers = {});

}  // namespace splitwave
