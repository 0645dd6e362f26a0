#include "splitwave/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "splitwave/errors.hpp"
#include "splitwave/kernels.hpp"
#include "splitwave/spectral.hpp"

namespace splitwave {

Field apply_dispersion(const Field& u, const DispersionSymbol& symbol) {
    const auto values = symbol_values(symbol, u.grid());
    std::vector<std::complex<double>> c(u.spectrum());
    for (int i = 0; i < u.size(); ++i) c[i] *= values[i];
    return Field::from_spectrum(u.grid(), std::move(c));
}

Field apply_b(const Field& u) {
    return dealias(multiply(u, derivative(u, 1)));
}

Field linear_flow(const Field& u, double t, const DispersionSymbol& symbol,
                  bool allow_growth) {
    const auto values = symbol_values(symbol, u.grid());
    double max_abs = 0.0;
    double max_exponent = 0.0;
    int worst_mode = 0;
    for (int i = 0; i < u.size(); ++i) {
        max_abs = std::max(max_abs, std::abs(values[i]));
        const double exponent = t * values[i].real();
        if (exponent > max_exponent) {
            max_exponent = exponent;
            worst_mode = u.grid().mode_of_bin(i);
        }
    }
    if (!allow_growth && max_exponent > 1e-12 * max_abs * std::abs(t)) {
        std::ostringstream msg;
        msg << "linear flow over t = " << t << " would amplify mode "
            << worst_mode << " by exp(" << max_exponent
            << "); pass allow_growth to accept this";
        throw validation_error(msg.str());
    }

    std::vector<std::complex<double>> c(u.spectrum());
    for (int i = 0; i < u.size(); ++i) c[i] *= std::exp(t * values[i]);
    // from_spectrum drops the imaginary part of the Nyquist multiplier.
    return Field::from_spectrum(u.grid(), std::move(c));
}

double shock_time(const Field& u) {
    const Field ux = derivative(u, 1);
    double max_slope = 0.0;
    for (double v : ux.samples()) max_slope = std::max(max_slope, v);
    if (max_slope <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / max_slope;
}

namespace {

Field burgers_characteristics(const Field& u0, double t,
                              const BurgersSolveOptions& options) {
    // Damping 1/(1 + t L-) with L- the steepest negative slope makes the map
    // w -> (1-d) w + d u0(x + t w) a contraction whenever t is short of the
    // shock time, including on profiles whose negative slopes are steep.
    const Field ux = derivative(u0, 1);
    double min_slope = 0.0;
    for (double v : ux.samples()) min_slope = std::min(min_slope, v);
    const double damping = 1.0 / (1.0 + t * std::max(0.0, -min_slope));

    const auto result = kernels::characteristic_solve(
        u0.spectrum(), u0.grid(), u0.samples(), t, damping, options.tolerance,
        options.max_iterations);
    if (result.stalled_nodes > 0) {
        std::ostringstream msg;
        msg << "characteristic fixed point stalled at " << result.stalled_nodes
            << " of " << u0.size() << " nodes after " << options.max_iterations
            << " iterations (t = " << t << ")";
        throw guard_error(msg.str());
    }
    return Field::from_samples(u0.grid(), result.values);
}

Field burgers_spectral_rk4(const Field& u0, double t, double shock,
                           const BurgersSolveOptions& options) {
    // Substep short relative to the shock time; 256 steps per shock time keeps
    // the O(h^4) error well below the cross-method tolerance.
    int substeps = options.rk_substeps;
    if (substeps <= 0)
        substeps = std::max(1, static_cast<int>(std::ceil(256.0 * t / shock)));
    const double h = t / substeps;

    Field u = u0;
    for (int s = 0; s < substeps; ++s) {
        const Field k1 = apply_b(u);
        const Field k2 = apply_b(add(u, scale(k1, h / 2)));
        const Field k3 = apply_b(add(u, scale(k2, h / 2)));
        const Field k4 = apply_b(add(u, scale(k3, h)));
        Field increment = add(add(k1, k4), scale(add(k2, k3), 2.0));
        u = add(u, scale(increment, h / 6));
        if (!all_finite(u))
            throw guard_error("spectral Burgers integration left the finite "
                              "range at substep " + std::to_string(s + 1));
    }
    return u;
}

}  // namespace

Field burgers_flow(const Field& u0, double t, const BurgersSolveOptions& options) {
    if (t < 0.0) throw config_error("Burgers flow runs forward in time only");
    if (t == 0.0) return u0;

    const double shock = shock_time(u0);
    if (!(t <= options.safety_fraction * shock)) {
        std::ostringstream msg;
        msg << "Burgers horizon t = " << t << " exceeds " << options.safety_fraction
            << " * shock_time = " << options.safety_fraction * shock
            << " (shock_time = " << shock << ")";
        throw guard_error(msg.str());
    }

    if (options.method == BurgersSolveOptions::Method::characteristics)
        return burgers_characteristics(u0, t, options);
    return burgers_spectral_rk4(u0, t, shock, options);
}

//----------------------------------------------------------------------------
// Commutator routes
//----------------------------------------------------------------------------

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double value = 1.0;
    for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
    return value;
}

Field product_term(const Field& v, int da, int db) {
    return dealias(multiply(derivative(v, da), derivative(v, db)));
}

}  // namespace

CommutatorPair commutator(const Field& v, const DispersionSymbol& symbol,
                          bool corrupt_expanded) {
    const Field vx = derivative(v, 1);
    const Field av = apply_dispersion(v, symbol);

    Field direct = subtract(
        subtract(apply_dispersion(dealias(multiply(v, vx)), symbol),
                 dealias(multiply(av, vx))),
        dealias(multiply(v, apply_dispersion(vx, symbol))));

    const auto& a = symbol.coefficients();
    std::vector<std::complex<double>> zero(v.size(), 0.0);
    Field expanded = Field::from_spectrum(v.grid(), zero);
    bool corrupted = false;
    for (int j = 2; j < static_cast<int>(a.size()); ++j) {
        if (a[j] == 0.0) continue;
        for (int k = 1; k <= j - 1; ++k) {
            double c = a[j] * binomial(j, k);
            if (corrupt_expanded && !corrupted) {
                c *= 1.0 + 1e-3;
                corrupted = true;
            }
            expanded = add(expanded, scale(product_term(v, k, j + 1 - k), c));
        }
    }
    return {std::move(direct), std::move(expanded)};
}

CommutatorPair double_commutator(const Field& v, const DispersionSymbol& symbol,
                                 bool corrupt_expanded) {
    const Field vx = derivative(v, 1);
    const Field av = apply_dispersion(v, symbol);
    const Field aav = apply_dispersion(av, symbol);

    const Field t1 = apply_dispersion(
        apply_dispersion(dealias(multiply(v, vx)), symbol), symbol);
    const Field t2 =
        apply_dispersion(derivative(dealias(multiply(v, av)), 1), symbol);
    const Field t3 = derivative(dealias(multiply(av, av)), 1);
    const Field t4 = derivative(dealias(multiply(v, aav)), 1);
    Field direct = add(subtract(t1, scale(t2, 2.0)), add(t3, t4));

    // Assemble the expansion per ordered monomial pair (j1, j2). For the
    // product d^i v * d^(M+1-i) v with M = j1 + j2, the four terms contribute
    //   binom(M,i) - 2 binom(j1+1,i) + [i=j1+1] + [i=j1] + [i=1] + [i=0],
    // accumulated under the order-sorted key. The boundary keys (0, M+1) and
    // (1, M) must vanish, the first per pair and the second once both orders
    // of each pair are in; that cancellation is what caps the surviving
    // derivative order at 2*ell - 1, and we assert it rather than assume it.
    const auto& a = symbol.coefficients();
    std::map<std::pair<int, int>, double> coeff;
    for (int j1 = 2; j1 < static_cast<int>(a.size()); ++j1) {
        if (a[j1] == 0.0) continue;
        for (int j2 = 2; j2 < static_cast<int>(a.size()); ++j2) {
            if (a[j2] == 0.0) continue;
            const int m = j1 + j2;
            const double weight = a[j1] * a[j2];
            for (int i = 0; i <= m + 1; ++i) {
                double c = binomial(m, i) - 2.0 * binomial(j1 + 1, i);
                if (i == j1 + 1) c += 1.0;
                if (i == j1) c += 1.0;
                if (i == 1) c += 1.0;
                if (i == 0) c += 1.0;
                if (c == 0.0) continue;
                const int lo = std::min(i, m + 1 - i);
                const int hi = std::max(i, m + 1 - i);
                coeff[{lo, hi}] += weight * c;
            }
        }
    }

    double scale_of_coeffs = 0.0;
    for (const auto& [key, c] : coeff)
        scale_of_coeffs = std::max(scale_of_coeffs, std::abs(c));
    const int max_order = 2 * symbol.degree() - 1;
    std::erase_if(coeff, [&](const auto& entry) {
        return std::abs(entry.second) <= 1e-9 * scale_of_coeffs;
    });
    for (const auto& [key, c] : coeff)
        if (key.second > max_order)
            throw validation_error(
                "double commutator expansion kept a derivative of order " +
                std::to_string(key.second) + "; top-order cancellation failed");

    std::vector<std::complex<double>> zero(v.size(), 0.0);
    Field expanded = Field::from_spectrum(v.grid(), zero);
    bool corrupted = false;
    for (const auto& [key, c] : coeff) {
        double value = c;
        if (corrupt_expanded && !corrupted) {
            value *= 1.0 + 1e-3;
            corrupted = true;
        }
        expanded = add(expanded, scale(product_term(v, key.first, key.second), value));
    }
    return {std::move(direct), std::move(expanded)};
}

}  // namespace splitwave
