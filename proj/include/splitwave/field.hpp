#pragma once

#include <complex>
#include <vector>

#include "splitwave/grid.hpp"

namespace splitwave {

// A real-valued periodic field with both representations kept in sync. A Field
// is immutable after construction; operations produce new Fields. Constructing
// from a spectrum enforces Hermitian symmetry (pairing bin i with bin n-i and
// keeping bins 0 and n/2 real), so the stored samples are exactly the real
// synthesis of the stored coefficients.
class Field {
public:
    static Field from_samples(const PeriodicGrid& grid, std::vector<double> samples);
    static Field from_spectrum(const PeriodicGrid& grid,
                               std::vector<std::complex<double>> spectrum);

    const PeriodicGrid& grid() const { return grid_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::vector<std::complex<double>>& spectrum() const { return spectrum_; }
    int size() const { return grid_.size(); }

private:
    Field(PeriodicGrid grid, std::vector<double> samples,
          std::vector<std::complex<double>> spectrum)
        : grid_(grid), samples_(std::move(samples)), spectrum_(std::move(spectrum)) {}

    PeriodicGrid grid_;
    std::vector<double> samples_;
    std::vector<std::complex<double>> spectrum_;
};

// Pointwise linear combinations, computed in spectral space so mixed-source
// fields stay consistent. Grids must match.
Field add(const Field& a, const Field& b);
Field subtract(const Field& a, const Field& b);
Field scale(const Field& a, double factor);

// Pointwise product of sample values. The result is not dealiased here; the
// caller decides (see spectral::dealias).
Field multiply(const Field& a, const Field& b);

bool all_finite(const Field& f);

}  // namespace splitwave
