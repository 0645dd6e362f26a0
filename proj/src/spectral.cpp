#include "splitwave/spectral.hpp"

#include <cmath>
#include <cstdlib>

#include "splitwave/errors.hpp"
#include "splitwave/kernels.hpp"

namespace splitwave {

Field derivative(const Field& f, int order) {
    if (order < 0) throw config_error("derivative order must be nonnegative");
    if (order == 0) return f;
    const auto& g = f.grid();
    const int n = g.size();
    std::vector<std::complex<double>> c(f.spectrum());
    for (int i = 0; i < n; ++i) {
        const std::complex<double> ik(0.0, g.wavenumber_of_bin(i));
        std::complex<double> mult(1.0, 0.0);
        for (int h = 0; h < order; ++h) mult *= ik;
        c[i] *= mult;
    }
    if (order % 2 == 1) c[g.nyquist_bin()] = 0.0;
    return Field::from_spectrum(g, std::move(c));
}

double sobolev_norm(const Field& f, double s) {
    const auto& g = f.grid();
    double sum = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double k = g.wavenumber_of_bin(i);
        sum += std::pow(1.0 + k * k, s) * std::norm(f.spectrum()[i]);
    }
    return std::sqrt(g.length() * sum);
}

double sobolev_distance(const Field& a, const Field& b, double s) {
    if (!(a.grid() == b.grid()))
        throw config_error("fields live on different grids");
    const auto& g = a.grid();
    double sum = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double k = g.wavenumber_of_bin(i);
        sum += std::pow(1.0 + k * k, s) * std::norm(a.spectrum()[i] - b.spectrum()[i]);
    }
    return std::sqrt(g.length() * sum);
}

double linf_norm(const Field& f) {
    double m = 0.0;
    for (double v : f.samples()) m = std::max(m, std::abs(v));
    return m;
}

namespace {

bool bin_survives(const PeriodicGrid& g, int i) {
    const int m = std::abs(g.mode_of_bin(i));
    return 3 * m <= g.size();
}

}  // namespace

Field dealias(const Field& f) {
    const auto& g = f.grid();
    std::vector<std::complex<double>> c(f.spectrum());
    for (int i = 0; i < g.size(); ++i)
        if (!bin_survives(g, i)) c[i] = 0.0;
    return Field::from_spectrum(g, std::move(c));
}

bool dealias_preserved(const Field& f) {
    const auto& g = f.grid();
    for (int i = 0; i < g.size(); ++i)
        if (!bin_survives(g, i) && std::norm(f.spectrum()[i]) != 0.0) return false;
    return true;
}

double mean(const Field& f) { return f.spectrum()[0].real(); }

std::vector<double> interpolate(const Field& f, const std::vector<double>& points) {
    return kernels::interpolate_batch(f.spectrum(), f.grid(), points);
}

}  // namespace splitwave
