#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "splitwave/errors.hpp"
#include "splitwave/spectral.hpp"

using namespace splitwave;

namespace {

Field sine_wave(const PeriodicGrid& grid, double amplitude, int mode = 1) {
    std::vector<double> s(grid.size());
    for (int j = 0; j < grid.size(); ++j)
        s[j] = amplitude * std::sin(2.0 * pi * mode * grid.node(j) / grid.length());
    return Field::from_samples(grid, std::move(s));
}

}  // namespace

TEST_CASE("the nonlinearity of a sine lands on the doubled mode") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const Field b = apply_b(sine_wave(grid, 1.0));
    // sin * cos = sin(2x)/2, untouched by the dealias cut.
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j)
        worst = std::max(worst,
                         std::abs(b.samples()[j] - 0.5 * std::sin(2.0 * grid.node(j))));
    CHECK(worst <= 1e-13);
    CHECK(dealias_preserved(b));
}

TEST_CASE("linear flow decays viscous modes at the exact rate") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("viscous-burgers").symbol;
    const Field f = oracles::random_field(grid, 20, 1.0, 3);
    const double t = 0.3;
    const Field g = linear_flow(f, t, symbol);
    for (int i = 0; i < grid.size(); ++i) {
        const double k = grid.wavenumber_of_bin(i);
        const auto expected = f.spectrum()[i] * std::exp(-k * k * t);
        CHECK(std::abs(g.spectrum()[i] - expected) <= 1e-14);
    }
}

TEST_CASE("linear flow is an isometry for purely dispersive symbols") {
    const PeriodicGrid grid(64, 2.0 * pi);
    for (const char* name : {"kdv", "kawahara"}) {
        const auto symbol = make_preset(name).symbol;
        for (int i = 0; i < 5; ++i) {
            const Field f = oracles::random_field(grid, 21, 1.0, 50 + i);
            const Field g = linear_flow(f, 0.7, symbol);
            for (double s : {0.0, 1.0, 3.0})
                CHECK(std::abs(sobolev_norm(g, s) / sobolev_norm(f, s) - 1.0) <=
                      1e-12);
        }
    }
}

TEST_CASE("linear flow composes as a semigroup and is the identity at t = 0") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field f = oracles::random_field(grid, 20, 1.0, 4);
    const Field two_steps = linear_flow(linear_flow(f, 0.2, symbol), 0.5, symbol);
    const Field one_step = linear_flow(f, 0.7, symbol);
    CHECK(oracles::rel_linf_diff(two_steps, one_step) <= 5e-13);
    CHECK(oracles::linf_diff(linear_flow(f, 0.0, symbol), f) <= 1e-15);
}

TEST_CASE("linear flow refuses unacknowledged amplification") {
    const PeriodicGrid grid(64, 4.0 * pi);
    const auto symbol = make_preset("benney-lin", 0.5).symbol;
    const Field f = oracles::random_field(grid, 20, 1.0, 5);
    CHECK_THROWS_AS(linear_flow(f, 0.1, symbol), validation_error);
    const Field g = linear_flow(f, 0.1, symbol, true);
    CHECK(all_finite(g));
    // Mode 1 sits at k = 1/2 where Re P(ik) = 0.1875 * beta = 0.09375.
    const double growth = std::abs(g.spectrum()[1]) / std::abs(f.spectrum()[1]);
    CHECK(growth == doctest::Approx(std::exp(0.09375 * 0.1)).epsilon(1e-10));
}

TEST_CASE("shock time of the unit sine is 1 and constants never break") {
    const PeriodicGrid grid(256, 2.0 * pi);
    CHECK(shock_time(sine_wave(grid, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shock_time(sine_wave(grid, 0.5)) == doctest::Approx(2.0).epsilon(1e-12));
    const Field constant = Field::from_samples(grid, std::vector<double>(256, 1.5));
    CHECK(std::isinf(shock_time(constant)));
}

TEST_CASE("Burgers characteristics match a tenfold finer grid") {
    const int n = 128;
    const PeriodicGrid grid(n, 2.0 * pi);
    const Field u0 = sine_wave(grid, 1.0);
    const double t = 0.4;
    const Field coarse = burgers_flow(u0, t, {});

    const PeriodicGrid fine_grid(10 * n, 2.0 * pi);
    std::vector<std::complex<double>> padded(10 * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const int m = grid.mode_of_bin(i);
        if (std::abs(m) < n / 2) padded[(m + 10 * n) % (10 * n)] = u0.spectrum()[i];
    }
    const Field fine0 = Field::from_spectrum(fine_grid, padded);
    const Field fine = burgers_flow(fine0, t, {});
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        worst = std::max(worst,
                         std::abs(coarse.samples()[j] - fine.samples()[10 * j]));
    CHECK(worst <= 1e-12);
}

TEST_CASE("Burgers flow conserves mean and L2 and honors the shock guard") {
    const PeriodicGrid grid(256, 2.0 * pi);
    const Field u0 = sine_wave(grid, 1.0);
    const Field w = burgers_flow(u0, 0.45, {});
    CHECK(std::abs(mean(w) - mean(u0)) <= 1e-13);
    CHECK(std::abs(sobolev_norm(w, 0) - sobolev_norm(u0, 0)) <= 1e-10);

    CHECK_THROWS_AS(burgers_flow(u0, 0.51, {}), guard_error);
    CHECK_THROWS_AS(burgers_flow(u0, -0.1, {}), config_error);
    try {
        burgers_flow(u0, 0.51, {});
    } catch (const guard_error& err) {
        CHECK(std::string(err.what()).find("shock_time") != std::string::npos);
    }

    const Field still = burgers_flow(u0, 0.0, {});
    CHECK(oracles::linf_diff(still, u0) == 0.0);
}

TEST_CASE("characteristic and spectral-RK4 routes agree") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const Field u0 = sine_wave(grid, 1.0);
    const Field a = burgers_flow(u0, 0.2, {});
    BurgersSolveOptions rk;
    rk.method = BurgersSolveOptions::Method::spectral_rk4;
    const Field b = burgers_flow(u0, 0.2, rk);
    CHECK(oracles::linf_diff(a, b) <= 1e-9);
}

TEST_CASE("a steep negative slope still converges thanks to the damping") {
    // -a sin(x) has its most positive slope a at x = pi, so the shock guard
    // admits t <= 1/(2a); the negative slope -a at 0 is what the plain
    // fixed point would diverge on for t > 1/a of it.
    const PeriodicGrid grid(128, 2.0 * pi);
    const Field u0 = sine_wave(grid, -3.0);
    const double t = 0.9 * 0.5 / 3.0;
    const Field w = burgers_flow(u0, t, {});
    // Verify the implicit relation w = u0(x + t w) directly.
    std::vector<double> shifted(grid.size());
    for (int j = 0; j < grid.size(); ++j)
        shifted[j] = grid.node(j) + t * w.samples()[j];
    const auto u0_at = interpolate(u0, shifted);
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j)
        worst = std::max(worst, std::abs(w.samples()[j] - u0_at[j]));
    CHECK(worst <= 1e-11);
}

//----------------------------------------------------------------------------
// Commutator routes
//----------------------------------------------------------------------------

TEST_CASE("the KdV commutator of a sine is -3 cos(2x)") {
    const PeriodicGrid grid(32, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const auto pair = commutator(sine_wave(grid, 1.0), symbol);
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j)
        worst = std::max(worst, std::abs(pair.expanded.samples()[j] +
                                         3.0 * std::cos(2.0 * grid.node(j))));
    CHECK(worst <= 3e-12);
    CHECK(oracles::rel_linf_diff(pair.direct, pair.expanded) <= 1e-12);
}

TEST_CASE("commutator routes agree on band-limited fields for every preset") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const std::vector<EquationPreset> presets = {
        make_preset("viscous-burgers"), make_preset("kdv"),
        make_preset("benney-lin", 0.5), make_preset("kawahara")};
    for (const auto& preset : presets) {
        double worst = 0.0;
        for (int i = 0; i < 6; ++i) {
            const Field v = oracles::random_field(grid, 16, 1.0, 600 + i);
            worst = std::max(
                worst, oracles::rel_linf_diff(commutator(v, preset.symbol).direct,
                                              commutator(v, preset.symbol).expanded));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("double commutator routes agree and match the nested bracket") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const std::vector<EquationPreset> presets = {
        make_preset("viscous-burgers"), make_preset("kdv"),
        make_preset("benney-lin", 0.5), make_preset("kawahara")};
    for (const auto& preset : presets) {
        double worst_routes = 0.0;
        double worst_nested = 0.0;
        for (int i = 0; i < 5; ++i) {
            const Field v = oracles::random_field(grid, 10, 1.0, 700 + i);
            const auto pair = double_commutator(v, preset.symbol);
            worst_routes =
                std::max(worst_routes,
                         oracles::rel_linf_diff(pair.direct, pair.expanded));
            // The four-term closed form is +[A,[A,B]], checked against a
            // composition that uses only single-bracket evaluations.
            const Field nested = oracles::nested_double_bracket(v, preset.symbol);
            worst_nested =
                std::max(worst_nested, oracles::rel_linf_diff(pair.direct, nested));
        }
        CHECK(worst_routes <= 1e-8);
        CHECK(worst_nested <= 1e-8);
    }
}

TEST_CASE("constant fields commute exactly") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const Field constant = Field::from_samples(grid, std::vector<double>(64, 0.7));
    const auto symbol = make_preset("kawahara").symbol;
    const auto single = commutator(constant, symbol);
    CHECK(linf_norm(single.direct) == 0.0);
    CHECK(linf_norm(single.expanded) == 0.0);
    const auto doubled = double_commutator(constant, symbol);
    CHECK(linf_norm(doubled.direct) == 0.0);
    CHECK(linf_norm(doubled.expanded) == 0.0);
}

TEST_CASE("a corrupted expansion coefficient is caught by the route check") {
    const PeriodicGrid grid(64, 2.0 * pi);
    const auto symbol = make_preset("kdv").symbol;
    const Field v = oracles::random_field(grid, 10, 1.0, 31);
    CHECK(oracles::rel_linf_diff(commutator(v, symbol, true).direct,
                                 commutator(v, symbol, true).expanded) > 1e-8);
    CHECK(oracles::rel_linf_diff(double_commutator(v, symbol, true).direct,
                                 double_commutator(v, symbol, true).expanded) >
          1e-8);
}
