#pragma once

#include <complex>
#include <string>
#include <vector>

#include "splitwave/grid.hpp"

namespace splitwave {

// Real polynomial P(X) = sum_{j=2}^{ell} a_j X^j defining the linear operator
// P(d/dx). Zeroth and first order terms are excluded: every supported equation
// starts at the second derivative, and a constant or transport term would
// change none of the structure while muddying the dissipativity bookkeeping.
class DispersionSymbol {
public:
    // coefficients[j] = a_j, so the vector has degree+1 entries and the
    // leading one must be nonzero.
    explicit DispersionSymbol(std::vector<double> coefficients);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coefficients_; }

    // P(ik), with the real and imaginary parts accumulated separately so a
    // purely dispersive symbol reports an exact zero real part.
    std::complex<double> at_wavenumber(double k) const;

private:
    std::vector<double> coefficients_;
};

std::vector<std::complex<double>> symbol_values(const DispersionSymbol& symbol,
                                                const PeriodicGrid& grid);

// Sobolev exponents the error analysis runs on: local error is measured in
// H^q, global error in H^r, and the persistence bound needs H^p data.
struct SobolevIndices {
    int r;
    int ell;
    int q;  // r + ell - 1
    int p;  // r + 2*ell - 1
};

SobolevIndices indices_for(int r, int ell);

struct DissipativityReport {
    double tolerance = 0.0;          // 1e-12 relative to the largest |P(ik)|
    double max_positive_real = 0.0;  // most positive Re P(ik) seen (0 if none)
    int worst_mode = 0;
    std::vector<int> violating_modes;
    bool pass = true;
};

// Checks Re P(ik_m) <= tolerance on every grid mode. With strict set, a
// violation throws; otherwise the report carries the warning.
DissipativityReport validate_dissipativity(const DispersionSymbol& symbol,
                                           const PeriodicGrid& grid, bool strict);

struct EquationPreset {
    std::string name;
    DispersionSymbol symbol;
};

// Named right-hand sides u_t = P(d/dx)u + u u_x:
//   viscous-burgers  P(X) = X^2
//   kdv              P(X) = X^3
//   benney-lin       P(X) = -X^3 - beta (X^2 + X^4) - X^5, beta >= 0
//   kawahara         P(X) = X^5 - X^3
EquationPreset make_preset(const std::string& name, double beta = 0.0);

}  // namespace splitwave
