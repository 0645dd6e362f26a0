#pragma once

#include <string>
#include <vector>

#include "splitwave/flows.hpp"

namespace splitwave {

enum class Scheme { lie, strang };

// One subflow application inside a composed step, recorded in execution order
// when a step is asked to log itself ('A' linear, 'B' Burgers).
struct SubstepRecord {
    char op;
    double span;
};

// Symmetric composition exp(dt/2 A) B(dt) exp(dt/2 A). The Burgers guard is
// evaluated on the state after the first half flow, which is the state the
// nonlinear subflow actually starts from.
Field strang_step(const Field& u, double dt, const DispersionSymbol& symbol,
                  const BurgersSolveOptions& burgers, bool allow_growth = false,
                  std::vector<SubstepRecord>* log = nullptr);

// First-order composition exp(dt A) B(dt), Burgers first.
Field lie_step(const Field& u, double dt, const DispersionSymbol& symbol,
               const BurgersSolveOptions& burgers, bool allow_growth = false,
               std::vector<SubstepRecord>* log = nullptr);

struct StepPlan {
    Scheme scheme = Scheme::strang;
    double dt = 0.0;
    long steps = 0;
    SobolevIndices indices{1, 3, 3, 6};
    BurgersSolveOptions burgers;
    bool allow_growth = false;
};

// Norm monitors at every step plus thinned snapshots (at most about 200, the
// initial and final states always included). An aborted run keeps everything
// recorded up to the failing step.
struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<double> h_r, h_q, h_p, l_inf;
    std::vector<long> snapshot_steps;
    std::vector<Field> snapshots;

    bool aborted = false;
    long abort_step = -1;  // 1-based index of the step that failed
    std::string abort_reason;
    double abort_shock_time = 0.0;
    double abort_hq = 0.0;

    const Field& final_field() const { return snapshots.back(); }
};

Trajectory evolve(const Field& u0, const StepPlan& plan,
                  const DispersionSymbol& symbol);

// Independent reference for the full flow: classical RK4 on the integrating
// factor transform v = exp(-t A) u, so only decaying or neutral exponentials
// ever appear. T must be an integer multiple of ref_dt.
Field reference_solution(const Field& u0, double T, const DispersionSymbol& symbol,
                         double ref_dt, bool allow_growth = false);

struct ReferenceSolution {
    Field field;
    double ref_dt;
    double self_delta;  // H^r distance between the ref_dt and ref_dt/2 runs
};

// Runs the reference at ref_dt and ref_dt/2 and insists the two agree to
// 1e-10 in H^r; anything looser disqualifies it as a convergence yardstick.
ReferenceSolution checked_reference(const Field& u0, double T,
                                    const DispersionSymbol& symbol, double ref_dt,
                                    int r, bool allow_growth = false);

}  // namespace splitwave
