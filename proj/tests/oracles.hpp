#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "splitwave/field.hpp"
#include "splitwave/flows.hpp"

// Independent implementations used only to check the library: quadratic-cost
// transforms, finite differences, oversampled interpolation, and bracket
// compositions built from lower-level pieces. Nothing here shares code with
// the paths under test.

namespace oracles {

// O(n^2) discrete Fourier transform with the same 1/n normalization as the
// library's forward transform.
std::vector<std::complex<double>> direct_dft(const std::vector<double>& samples);

// O(n^2) synthesis sum, real part.
std::vector<double> direct_inverse(
    const std::vector<std::complex<double>>& spectrum, int n);

// Centered fourth-order finite differences on the periodic grid.
std::vector<double> fd_derivative1(const std::vector<double>& samples, double length);
std::vector<double> fd_derivative2(const std::vector<double>& samples, double length);

// Evaluate f's interpolant by building it on an eightfold-refined grid via
// spectral zero-padding and reading off refined nodes. Points must be nodes
// of the refined grid.
std::vector<double> oversampled_values(const splitwave::Field& f, int factor);

// Spatial reflection x -> -x as a sample permutation.
splitwave::Field reflect(const splitwave::Field& f);

// Random band-limited field, seeded; peak normalized to `amplitude`.
splitwave::Field random_field(const splitwave::PeriodicGrid& grid, int max_mode,
                              double amplitude, std::uint64_t seed);

// [A, [A, B]](v) assembled only from single-bracket evaluations: with
// Q = [A, B] quadratic in v, dQ(v)[w] = Q(v + w) - Q(v) - Q(w), and the
// nested bracket is A(Q(v)) - dQ(v)[A v]. Exercises none of the
// double-bracket code.
splitwave::Field nested_double_bracket(const splitwave::Field& v,
                                       const splitwave::DispersionSymbol& symbol);

// Largest pointwise defect of the traveling-wave ansatz 3c sech^2 in the PDE
// u_t = u_xxx + u u_x, using hand-derived closed forms for every derivative.
double soliton_ansatz_residual(const splitwave::PeriodicGrid& grid, double speed);

double linf_diff(const splitwave::Field& a, const splitwave::Field& b);
double rel_linf_diff(const splitwave::Field& a, const splitwave::Field& b);

}  // namespace oracles
