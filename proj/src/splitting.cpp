#include "splitwave/splitting.hpp"

#include <cmath>
#include <sstream>

#include "splitwave/errors.hpp"
#include "splitwave/spectral.hpp"

namespace splitwave {

Field strang_step(const Field& u, double dt, const DispersionSymbol& symbol,
                  const BurgersSolveOptions& burgers, bool allow_growth,
                  std::vector<SubstepRecord>* log) {
    Field half = linear_flow(u, dt / 2, symbol, allow_growth);
    if (log) log->push_back({'A', dt / 2});
    Field mid = burgers_flow(half, dt, burgers);
    if (log) log->push_back({'B', dt});
    Field out = linear_flow(mid, dt / 2, symbol, allow_growth);
    if (log) log->push_back({'A', dt / 2});
    return out;
}

Field lie_step(const Field& u, double dt, const DispersionSymbol& symbol,
               const BurgersSolveOptions& burgers, bool allow_growth,
               std::vector<SubstepRecord>* log) {
    Field mid = burgers_flow(u, dt, burgers);
    if (log) log->push_back({'B', dt});
    Field out = linear_flow(mid, dt, symbol, allow_growth);
    if (log) log->push_back({'A', dt});
    return out;
}

namespace {

void record_state(Trajectory& trajectory, const Field& u, long step, double dt,
                  const SobolevIndices& indices) {
    trajectory.times.push_back(step * dt);
    trajectory.h_r.push_back(sobolev_norm(u, indices.r));
    trajectory.h_q.push_back(sobolev_norm(u, indices.q));
    trajectory.h_p.push_back(sobolev_norm(u, indices.p));
    trajectory.l_inf.push_back(linf_norm(u));
}

}  // namespace

Trajectory evolve(const Field& u0, const StepPlan& plan,
                  const DispersionSymbol& symbol) {
    if (!(plan.dt > 0.0)) throw config_error("step size must be positive");
    if (plan.steps < 1) throw config_error("step count must be at least 1");
    if (plan.indices.ell != symbol.degree())
        throw config_error("Sobolev indices were derived for degree " +
                           std::to_string(plan.indices.ell) +
                           " but the symbol has degree " +
                           std::to_string(symbol.degree()));

    Trajectory trajectory;
    trajectory.dt = plan.dt;
    const long thin = std::max(1L, (plan.steps + 199) / 200);

    Field u = u0;
    record_state(trajectory, u, 0, plan.dt, plan.indices);
    trajectory.snapshot_steps.push_back(0);
    trajectory.snapshots.push_back(u);

    for (long step = 1; step <= plan.steps; ++step) {
        Field next = u;
        try {
            next = plan.scheme == Scheme::strang
                       ? strang_step(u, plan.dt, symbol, plan.burgers,
                                     plan.allow_growth)
                       : lie_step(u, plan.dt, symbol, plan.burgers,
                                  plan.allow_growth);
            if (!all_finite(next))
                throw guard_error("state left the finite range");
        } catch (const guard_error& err) {
            trajectory.aborted = true;
            trajectory.abort_step = step;
            trajectory.abort_reason = err.what();
            trajectory.abort_shock_time = shock_time(u);
            trajectory.abort_hq = sobolev_norm(u, plan.indices.q);
            if (trajectory.snapshot_steps.back() != step - 1) {
                trajectory.snapshot_steps.push_back(step - 1);
                trajectory.snapshots.push_back(u);
            }
            return trajectory;
        }
        u = std::move(next);
        record_state(trajectory, u, step, plan.dt, plan.indices);
        if (step % thin == 0 || step == plan.steps) {
            trajectory.snapshot_steps.push_back(step);
            trajectory.snapshots.push_back(u);
        }
    }
    return trajectory;
}

//----------------------------------------------------------------------------
// Integrating-factor RK4 reference
//----------------------------------------------------------------------------

namespace {

using Spectrum = std::vector<std::complex<double>>;

Spectrum multiplier(const DispersionSymbol& symbol, const PeriodicGrid& grid,
                    double t) {
    const auto values = symbol_values(symbol, grid);
    Spectrum m(values.size());
    for (size_t i = 0; i < values.size(); ++i) m[i] = std::exp(t * values[i]);
    // The Nyquist coefficient of a real field is real; keep its multiplier
    // real so the bin never leaks a phase the grid cannot represent.
    m[grid.nyquist_bin()] = m[grid.nyquist_bin()].real();
    return m;
}

Spectrum nonlinearity(const PeriodicGrid& grid, const Spectrum& c) {
    return apply_b(Field::from_spectrum(grid, c)).spectrum();
}

void check_finite(const Spectrum& c, long step) {
    for (const auto& v : c)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw guard_error("reference integration left the finite range at "
                              "step " + std::to_string(step));
}

}  // namespace

Field reference_solution(const Field& u0, double T, const DispersionSymbol& symbol,
                         double ref_dt, bool allow_growth) {
    if (!(ref_dt > 0.0)) throw config_error("reference step must be positive");
    const long steps = std::llround(T / ref_dt);
    if (steps < 1 || std::abs(steps * ref_dt - T) > 1e-9 * std::max(T, 1.0))
        throw config_error("reference step must divide the final time");

    if (!allow_growth) {
        // Same growth acknowledgement contract as the linear flow.
        const auto values = symbol_values(symbol, u0.grid());
        double max_abs = 0.0;
        double worst = 0.0;
        for (const auto& v : values) {
            max_abs = std::max(max_abs, std::abs(v));
            worst = std::max(worst, v.real());
        }
        if (worst * T > 1e-12 * max_abs * T)
            throw validation_error("reference integration would amplify a mode; "
                                   "pass allow_growth to accept this");
    }

    const auto& grid = u0.grid();
    const double h = ref_dt;
    const Spectrum e_half = multiplier(symbol, grid, h / 2);
    const Spectrum e_full = multiplier(symbol, grid, h);
    const int n = grid.size();

    auto mul = [n](const Spectrum& m, const Spectrum& c) {
        Spectrum out(n);
        for (int i = 0; i < n; ++i) out[i] = m[i] * c[i];
        return out;
    };

    Spectrum u = u0.spectrum();
    for (long step = 1; step <= steps; ++step) {
        const Spectrum k1 = nonlinearity(grid, u);

        Spectrum stage(n);
        for (int i = 0; i < n; ++i) stage[i] = e_half[i] * (u[i] + 0.5 * h * k1[i]);
        const Spectrum k2 = nonlinearity(grid, stage);

        const Spectrum eu_half = mul(e_half, u);
        for (int i = 0; i < n; ++i) stage[i] = eu_half[i] + 0.5 * h * k2[i];
        const Spectrum k3 = nonlinearity(grid, stage);

        const Spectrum eu_full = mul(e_full, u);
        for (int i = 0; i < n; ++i)
            stage[i] = eu_full[i] + h * e_half[i] * k3[i];
        const Spectrum k4 = nonlinearity(grid, stage);

        for (int i = 0; i < n; ++i)
            u[i] = eu_full[i] + h / 6.0 *
                       (e_full[i] * k1[i] +
                        2.0 * e_half[i] * (k2[i] + k3[i]) + k4[i]);
        check_finite(u, step);
    }
    return Field::from_spectrum(grid, std::move(u));
}

ReferenceSolution checked_reference(const Field& u0, double T,
                                    const DispersionSymbol& symbol, double ref_dt,
                                    int r, bool allow_growth) {
    const Field coarse = reference_solution(u0, T, symbol, ref_dt, allow_growth);
    const Field fine = reference_solution(u0, T, symbol, ref_dt / 2, allow_growth);
    const double delta = sobolev_distance(coarse, fine, r);
    if (!(delta <= 1e-10)) {
        std::ostringstream msg;
        msg << "reference self-convergence delta " << delta
            << " exceeds 1e-10 in H^" << r << " (ref_dt = " << ref_dt << ")";
        throw validation_error(msg.str());
    }
    return {fine, ref_dt, delta};
}

}  // namespace splitwave
