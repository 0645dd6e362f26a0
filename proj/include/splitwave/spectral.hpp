#pragma once

#include <vector>

#include "splitwave/field.hpp"

namespace splitwave {

// Spectral derivative of the given order via (ik)^order multipliers. Odd
// orders zero the Nyquist bin: the folded cosine mode has no odd derivative a
// real coefficient could represent, and dropping it keeps the result real.
Field derivative(const Field& f, int order);

// Discrete Sobolev norm sqrt(L * sum_i (1 + k_i^2)^s |c_i|^2). With s = 0 this
// is the quadrature L2 norm sqrt(L/n * sum_j u_j^2).
double sobolev_norm(const Field& f, double s);

// Same weighted norm applied to the coefficient difference of two fields on a
// common grid, without building the difference field.
double sobolev_distance(const Field& a, const Field& b, double s);

double linf_norm(const Field& f);

// 2/3-rule truncation: zero every bin with |mode| > n/3 so that products of
// surviving modes cannot alias back into them. Idempotent.
Field dealias(const Field& f);

bool dealias_preserved(const Field& f);

// Mean value, the zeroth coefficient.
double mean(const Field& f);

// Evaluate the trigonometric interpolant at arbitrary points (reduced mod L).
// Exact at nodes; spectrally accurate in between.
std::vector<double> interpolate(const Field& f, const std::vector<double>& points);

}  // namespace splitwave
