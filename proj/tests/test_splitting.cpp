#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "splitwave/errors.hpp"
#include "splitwave/spectral.hpp"
#include "splitwave/splitting.hpp"

using namespace splitwave;

namespace {

Field sine_wave(const PeriodicGrid& grid, double amplitude) {
    std::vector<double> s(grid.size());
    for (int j = 0; j < grid.size(); ++j)
        s[j] = amplitude * std::sin(grid.node(j));
    return Field::from_samples(grid, std::move(s));
}

StepPlan kdv_plan(double dt, int steps) {
    StepPlan plan;
    plan.scheme = Scheme::strang;
    plan.dt = dt;
    plan.steps = steps;
    plan.indices = indices_for(1, 3);
    return plan;
}

}  // namespace

TEST_CASE("substeps run in the documented order with the documented spans") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);
    const double dt = 0.01;

    std::vector<SubstepRecord> log;
    strang_step(u0, dt, symbol, {}, false, &log);
    REQUIRE(log.size() == 3);
    CHECK(log[0].op == 'A');
    CHECK(log[0].span == dt / 2.0);
    CHECK(log[1].op == 'B');
    CHECK(log[1].span == dt);
    CHECK(log[2].op == 'A');
    CHECK(log[2].span == dt / 2.0);

    log.clear();
    lie_step(u0, dt, symbol, {}, false, &log);
    REQUIRE(log.size() == 2);
    CHECK(log[0].op == 'B');
    CHECK(log[0].span == dt);
    CHECK(log[1].op == 'A');
    CHECK(log[1].span == dt);
}

TEST_CASE("a Strang step is exactly the half-linear sandwich") {
    const PeriodicGrid grid(128, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);
    const double dt = 0.02;
    const Field stepped = strang_step(u0, dt, symbol, {});
    const Field manual = linear_flow(
        burgers_flow(linear_flow(u0, dt / 2.0, symbol), dt, {}), dt / 2.0, symbol);
    CHECK(oracles::linf_diff(stepped, manual) == 0.0);
}

TEST_CASE("two half steps beat one full step at third order") {
    const PeriodicGrid grid(256, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);

    std::vector<double> dts, gaps;
    for (double dt : {0.02, 0.01, 0.005, 0.0025}) {
        const Field one = strang_step(u0, dt, symbol, {});
        const Field half = strang_step(strang_step(u0, dt / 2.0, symbol, {}),
                                       dt / 2.0, symbol, {});
        dts.push_back(dt);
        gaps.push_back(sobolev_distance(one, half, 1.0));
    }
    // log-log slope of the defect between the two compositions
    double slope_lo = 10.0, slope_hi = 0.0;
    for (std::size_t i = 1; i < dts.size(); ++i) {
        const double s = std::log(gaps[i - 1] / gaps[i]) / std::log(dts[i - 1] / dts[i]);
        slope_lo = std::min(slope_lo, s);
        slope_hi = std::max(slope_hi, s);
    }
    CHECK(slope_lo >= 2.7);
    CHECK(slope_hi <= 3.3);
}

TEST_CASE("evolve records monitors for every step and thins snapshots") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);
    const int steps = 500;
    const Trajectory traj = evolve(u0, kdv_plan(0.25 / steps, steps), symbol);

    CHECK_FALSE(traj.aborted);
    REQUIRE(traj.times.size() == static_cast<std::size_t>(steps) + 1);
    CHECK(traj.h_r.size() == traj.times.size());
    CHECK(traj.h_q.size() == traj.times.size());
    CHECK(traj.h_p.size() == traj.times.size());
    CHECK(traj.l_inf.size() == traj.times.size());
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(traj.snapshots.size() == traj.snapshot_steps.size());
    CHECK(traj.snapshots.size() <= 220);
    CHECK(traj.snapshot_steps.back() == steps);
    // The H^q monitor should stay within a mild factor of its start here.
    const double hq0 = traj.h_q.front();
    for (double v : traj.h_q) CHECK(v <= 3.0 * hq0);
}

TEST_CASE("evolve aborts cleanly when a substep hits the shock guard") {
    const PeriodicGrid grid(128, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    // Shock time 1/5, guard 1/10, so a 0.15 step is refused immediately.
    const Field u0 = sine_wave(grid, 5.0);
    const Trajectory traj = evolve(u0, kdv_plan(0.15, 4), symbol);
    CHECK(traj.aborted);
    CHECK(traj.abort_step == 1);
    CHECK(traj.times.size() == 1);
    CHECK_FALSE(traj.abort_reason.empty());
    CHECK(traj.abort_shock_time > 0.0);
    CHECK(traj.abort_shock_time < 0.3);
    CHECK(!traj.snapshots.empty());
}

TEST_CASE("evolve validates its plan") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);
    StepPlan plan = kdv_plan(0.01, 10);
    plan.dt = 0.0;
    CHECK_THROWS_AS(evolve(u0, plan, symbol), config_error);
    plan = kdv_plan(0.01, 0);
    CHECK_THROWS_AS(evolve(u0, plan, symbol), config_error);
    plan = kdv_plan(0.01, 10);
    plan.indices = indices_for(1, 2);  // wrong operator order for KdV
    CHECK_THROWS_AS(evolve(u0, plan, symbol), config_error);
}

TEST_CASE("the integrating-factor reference converges against itself") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);
    const auto ref = checked_reference(u0, 0.25, symbol, 0.25 / 2048.0, 1);
    CHECK(ref.self_delta <= 1e-10);
    CHECK(ref.ref_dt == 0.25 / 2048.0);
    CHECK(all_finite(ref.field));
    CHECK_THROWS_AS(reference_solution(u0, 1.0, symbol, 0.3), config_error);
}

TEST_CASE("reversing space and stepping back returns the initial state") {
    const PeriodicGrid grid(128, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field u0 = sine_wave(grid, 0.5);
    const int steps = 500;
    const StepPlan plan = kdv_plan(0.5 / steps, steps);
    const Trajectory forward = evolve(u0, plan, symbol);
    REQUIRE_FALSE(forward.aborted);
    const Trajectory back = evolve(oracles::reflect(forward.final_field()), plan, symbol);
    REQUIRE_FALSE(back.aborted);
    CHECK(oracles::linf_diff(oracles::reflect(back.final_field()), u0) <= 1e-8);
}

TEST_CASE("dispersive runs conserve the L2 norm over a long window") {
    const PeriodicGrid grid(128, 2.0 * pi);
    for (const char* name : {"kdv", "kawahara"}) {
        const auto symbol = make_preset(name).symbol;
        const int ell = symbol.degree();
        const Field u0 = sine_wave(grid, 0.5);
        StepPlan plan;
        plan.scheme = Scheme::strang;
        plan.dt = 1e-3;
        plan.steps = 1000;
        plan.indices = indices_for(1, ell);
        const Trajectory traj = evolve(u0, plan, symbol);
        REQUIRE_FALSE(traj.aborted);
        const double l2_0 = sobolev_norm(u0, 0.0);
        const double l2_T = sobolev_norm(traj.final_field(), 0.0);
        CHECK(std::abs(l2_T - l2_0) / l2_0 <= 1e-6);
    }
}

TEST_CASE("constants are fixed points of every scheme") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kawahara").symbol;
    const Field u0 = Field::from_samples(grid, std::vector<double>(64, 0.8));
    StepPlan plan;
    plan.dt = 0.01;
    plan.steps = 10;
    plan.indices = indices_for(1, 5);
    for (auto scheme : {Scheme::strang, Scheme::lie}) {
        plan.scheme = scheme;
        const Trajectory traj = evolve(u0, plan, symbol);
        REQUIRE_FALSE(traj.aborted);
        CHECK(oracles::linf_diff(traj.final_field(), u0) <= 1e-12);
    }
}

TEST_CASE("tiny amplitudes reduce to the linear flow") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("viscous-burgers").symbol;
    const Field u0 = sine_wave(grid, 1e-8);
    StepPlan plan;
    plan.scheme = Scheme::strang;
    plan.dt = 1e-3;
    plan.steps = 500;
    plan.indices = indices_for(1, 2);
    const Trajectory traj = evolve(u0, plan, symbol);
    REQUIRE_FALSE(traj.aborted);
    const Field expected = linear_flow(u0, 0.5, symbol);
    CHECK(oracles::rel_linf_diff(traj.final_field(), expected) <= 1e-6);
}
