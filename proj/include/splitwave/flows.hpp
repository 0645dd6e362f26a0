#pragma once

#include "splitwave/field.hpp"
#include "splitwave/model.hpp"

namespace splitwave {

// The two halves of the right-hand side u_t = P(d/dx)u + u u_x, their exact
// subflows, and the commutator identities that justify composing them.

// P(d/dx)u, applied as a Fourier multiplier.
Field apply_dispersion(const Field& u, const DispersionSymbol& symbol);

// Dealiased nonlinearity B(u) = u u_x.
Field apply_b(const Field& u);

// Exact linear subflow exp(t P(d/dx)). Refuses to amplify any mode (relative
// tolerance 1e-12 on the exponent) unless allow_growth acknowledges it; the
// Nyquist bin keeps only the real part of its multiplier so the field stays
// real. Negative t is allowed when no mode would grow under it.
Field linear_flow(const Field& u, double t, const DispersionSymbol& symbol,
                  bool allow_growth = false);

// 1 / max_j u'(x_j), the classical breakdown horizon of the inviscid Burgers
// flow started from u. Infinity when the slope never points up.
double shock_time(const Field& u);

struct BurgersSolveOptions {
    enum class Method { characteristics, spectral_rk4 };
    Method method = Method::characteristics;
    double tolerance = 1e-12;      // fixed-point residual per node
    int max_iterations = 100;
    double safety_fraction = 0.5;  // usable fraction of the shock time
    int rk_substeps = 0;           // 0 picks substeps from the shock time
};

// Exact nonlinear subflow of u_t = u u_x over [0, t], guarded by
// t <= safety_fraction * shock_time(u0). The default route solves the
// characteristic equation w = u0(x + t w) pointwise; the spectral RK4 route is
// an independent cross-check of the same flow.
Field burgers_flow(const Field& u0, double t, const BurgersSolveOptions& options);

// Two independent evaluations of the same bracket. `direct` composes the
// operators literally; `expanded` evaluates the Leibniz expansion in which the
// top-order derivative products have cancelled. Agreement of the two is the
// artifact's check that the cancellation is real.
struct CommutatorPair {
    Field direct;
    Field expanded;
};

// [A, B](v) with A = P(d/dx) and B(u) = u u_x:
//   direct   = P(v v_x) - (P v) v_x - v P(v_x)
//   expanded = sum_j a_j sum_{k=1}^{j-1} binom(j,k) d^k v * d^{j+1-k} v
// Surviving derivative orders stop at ell, one below the naive ell+1.
CommutatorPair commutator(const Field& v, const DispersionSymbol& symbol,
                          bool corrupt_expanded = false);

// [A, [A, B]](v), the bracket behind the splitting's second-order local error:
//   direct   = A^2(v v_x) - 2 A((v Av)_x) + ((Av)^2)_x + (v A^2 v)_x
//   expanded = assembled derivative products; orders 2*ell+1 and 2*ell cancel
//              identically and are asserted to, leaving top order 2*ell - 1.
CommutatorPair double_commutator(const Field& v, const DispersionSymbol& symbol,
                                 bool corrupt_expanded = false);

}  // namespace splitwave
