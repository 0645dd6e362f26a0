#include "splitwave/field.hpp"

#include <cmath>

#include "splitwave/errors.hpp"
#include "splitwave/fft.hpp"

namespace splitwave {
namespace {

void check_same_grid(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid()))
        throw config_error("fields live on different grids");
}

std::vector<std::complex<double>> symmetrize(std::vector<std::complex<double>> c) {
    const int n = static_cast<int>(c.size());
    c[0] = std::complex<double>(c[0].real(), 0.0);
    c[n / 2] = std::complex<double>(c[n / 2].real(), 0.0);
    for (int i = 1; i < n / 2; ++i) {
        const auto half = 0.5 * (c[i] + std::conj(c[n - i]));
        c[i] = half;
        c[n - i] = std::conj(half);
    }
    return c;
}

}  // namespace

Field Field::from_samples(const PeriodicGrid& grid, std::vector<double> samples) {
    if (static_cast<int>(samples.size()) != grid.size())
        throw config_error("sample count does not match grid size");
    auto spectrum = fft::forward(samples);
    return Field(grid, std::move(samples), std::move(spectrum));
}

Field Field::from_spectrum(const PeriodicGrid& grid,
                           std::vector<std::complex<double>> spectrum) {
    if (static_cast<int>(spectrum.size()) != grid.size())
        throw config_error("coefficient count does not match grid size");
    spectrum = symmetrize(std::move(spectrum));
    auto samples = fft::inverse(spectrum);
    return Field(grid, std::move(samples), std::move(spectrum));
}

Field add(const Field& a, const Field& b) {
    check_same_grid(a, b);
    std::vector<std::complex<double>> c(a.spectrum());
    for (int i = 0; i < a.size(); ++i) c[i] += b.spectrum()[i];
    return Field::from_spectrum(a.grid(), std::move(c));
}

Field subtract(const Field& a, const Field& b) {
    check_same_grid(a, b);
    std::vector<std::complex<double>> c(a.spectrum());
    for (int i = 0; i < a.size(); ++i) c[i] -= b.spectrum()[i];
    return Field::from_spectrum(a.grid(), std::move(c));
}

Field scale(const Field& a, double factor) {
    std::vector<std::complex<double>> c(a.spectrum());
    for (auto& v : c) v *= factor;
    return Field::from_spectrum(a.grid(), std::move(c));
}

Field multiply(const Field& a, const Field& b) {
    check_same_grid(a, b);
    std::vector<double> s(a.samples());
    for (int j = 0; j < a.size(); ++j) s[j] *= b.samples()[j];
    return Field::from_samples(a.grid(), std::move(s));
}

bool all_finite(const Field& f) {
    for (double v : f.samples())
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace splitwave
