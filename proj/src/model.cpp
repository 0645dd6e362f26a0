#include "splitwave/model.hpp"

#include <algorithm>
#include <cmath>

#include "splitwave/errors.hpp"

namespace splitwave {

DispersionSymbol::DispersionSymbol(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.size() < 3)
        throw config_error("dispersion polynomial must have degree at least 2");
    if (coefficients_[0] != 0.0 || coefficients_[1] != 0.0)
        throw config_error("dispersion polynomial must not contain constant or "
                           "first-order terms");
    if (coefficients_.back() == 0.0)
        throw config_error("leading dispersion coefficient must be nonzero");
}

std::complex<double> DispersionSymbol::at_wavenumber(double k) const {
    // (ik)^j cycles through {1, i, -1, -i} * k^j; summing the real and
    // imaginary contributions in separate accumulators keeps Re P(ik) exactly
    // zero for odd-only polynomials instead of collecting rounding dust.
    double re = 0.0;
    double im = 0.0;
    double kj = 1.0;
    for (int j = 0; j < static_cast<int>(coefficients_.size()); ++j) {
        const double term = coefficients_[j] * kj;
        switch (j % 4) {
            case 0: re += term; break;
            case 1: im += term; break;
            case 2: re -= term; break;
            case 3: im -= term; break;
        }
        kj *= k;
    }
    return {re, im};
}

std::vector<std::complex<double>> symbol_values(const DispersionSymbol& symbol,
                                                const PeriodicGrid& grid) {
    std::vector<std::complex<double>> values(grid.size());
    for (int i = 0; i < grid.size(); ++i)
        values[i] = symbol.at_wavenumber(grid.wavenumber_of_bin(i));
    return values;
}

SobolevIndices indices_for(int r, int ell) {
    if (r < 1) throw config_error("index r must be at least 1");
    if (ell < 2) throw config_error("dispersion degree must be at least 2");
    return {r, ell, r + ell - 1, r + 2 * ell - 1};
}

DissipativityReport validate_dissipativity(const DispersionSymbol& symbol,
                                           const PeriodicGrid& grid, bool strict) {
    const auto values = symbol_values(symbol, grid);
    double max_abs = 0.0;
    for (const auto& v : values) max_abs = std::max(max_abs, std::abs(v));

    DissipativityReport report;
    report.tolerance = 1e-12 * max_abs;
    for (int i = 0; i < grid.size(); ++i) {
        const double re = values[i].real();
        if (re > report.tolerance) {
            report.pass = false;
            report.violating_modes.push_back(grid.mode_of_bin(i));
            if (re > report.max_positive_real) {
                report.max_positive_real = re;
                report.worst_mode = grid.mode_of_bin(i);
            }
        }
    }
    std::sort(report.violating_modes.begin(), report.violating_modes.end());

    if (strict && !report.pass)
        throw validation_error(
            "symbol amplifies mode " + std::to_string(report.worst_mode) +
            ": Re P(ik) = " + std::to_string(report.max_positive_real) +
            " exceeds tolerance " + std::to_string(report.tolerance));
    return report;
}

EquationPreset make_preset(const std::string& name, double beta) {
    if (name == "viscous-burgers")
        return {name, DispersionSymbol({0, 0, 1})};
    if (name == "kdv")
        return {name, DispersionSymbol({0, 0, 0, 1})};
    if (name == "kawahara")
        return {name, DispersionSymbol({0, 0, 0, -1, 0, 1})};
    if (name == "benney-lin") {
        if (beta < 0.0)
            throw config_error("benney-lin requires beta >= 0");
        return {name, DispersionSymbol({0, 0, -beta, -1, -beta, -1})};
    }
    throw config_error("unknown equation preset: " + name);
}

}  // namespace splitwave
