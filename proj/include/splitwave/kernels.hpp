#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "splitwave/grid.hpp"

// Per-node kernels behind the characteristic solver and the interpolant.
// Every node is independent, so the OpenMP versions partition the loop and
// nothing else; serial twins are kept for testing and benchmarking. Both call
// the same detail:: routines, which makes their outputs identical bitwise
// regardless of thread count.

namespace splitwave::kernels {

struct CharacteristicResult {
    std::vector<double> values;
    int max_iterations_used = 0;
    int stalled_nodes = 0;  // nodes that hit the iteration cap above tolerance
};

std::vector<double> interpolate_batch(const std::vector<std::complex<double>>& spectrum,
                                      const PeriodicGrid& grid,
                                      const std::vector<double>& points);

// Damped fixed point for w = u0(x_j + t w) at every node, starting from
// start[j]. The caller picks the damping factor; see flows.cpp for the choice
// that keeps the iteration contractive up to the shock guard.
CharacteristicResult characteristic_solve(const std::vector<std::complex<double>>& spectrum,
                                          const PeriodicGrid& grid,
                                          const std::vector<double>& start,
                                          double t, double damping,
                                          double tolerance, int max_iterations);

namespace serial {
std::vector<double> interpolate_batch(const std::vector<std::complex<double>>& spectrum,
                                      const PeriodicGrid& grid,
                                      const std::vector<double>& points);
CharacteristicResult characteristic_solve(const std::vector<std::complex<double>>& spectrum,
                                          const PeriodicGrid& grid,
                                          const std::vector<double>& start,
                                          double t, double damping,
                                          double tolerance, int max_iterations);
}  // namespace serial

namespace detail {

// Direct synthesis of the interpolant at one point, using the Hermitian
// symmetry of a real field's spectrum: value = c_0 + 2 Re sum_{0<m<n/2} c_m z^m
// + Re(c_{n/2} z^{n/2}) with z = exp(2 pi i x / L). The z-power recurrence is
// resynchronized periodically to keep phase error flat in n.
inline double eval_point(const std::vector<std::complex<double>>& c,
                         const PeriodicGrid& g, double x) {
    const int n = g.size();
    double frac = std::fmod(x, g.length());
    if (frac < 0.0) frac += g.length();
    const double theta = 2.0 * pi * frac / g.length();
    const std::complex<double> z(std::cos(theta), std::sin(theta));
    double acc = c[0].real();
    std::complex<double> zp(1.0, 0.0);
    for (int m = 1; m < n / 2; ++m) {
        zp = (m % 128 == 0) ? std::polar(1.0, m * theta) : zp * z;
        acc += 2.0 * (c[m].real() * zp.real() - c[m].imag() * zp.imag());
    }
    zp *= z;
    acc += c[n / 2].real() * zp.real() - c[n / 2].imag() * zp.imag();
    return acc;
}

struct NodeSolve {
    double w;
    int iterations;
    bool converged;
};

inline NodeSolve solve_node(const std::vector<std::complex<double>>& c,
                            const PeriodicGrid& g, double x, double w0, double t,
                            double damping, double tolerance, int max_iterations) {
    double w = w0;
    for (int it = 1; it <= max_iterations; ++it) {
        const double target = eval_point(c, g, x + t * w);
        const double residual = target - w;
        if (std::abs(residual) <= tolerance) return {w, it, true};
        w += damping * residual;
    }
    return {w, max_iterations, false};
}

}  // namespace detail
}  // namespace splitwave::kernels
