#pragma once

#include <vector>

#include "splitwave/errors.hpp"

namespace splitwave {

inline constexpr double pi = 3.14159265358979323846;

// Uniform periodic grid on [0, L) with an even number of nodes. Fourier bins
// follow the transform's natural layout: bin i holds integer mode m = i for
// i <= n/2 and m = i - n above, so the represented modes are
// {-n/2+1, ..., n/2} with the shared Nyquist pair folded onto +n/2.
class PeriodicGrid {
public:
    PeriodicGrid(int n, double length) : n_(n), length_(length) {
        if (n < 4 || n % 2 != 0)
            throw config_error("grid size must be even and at least 4, got " +
                               std::to_string(n));
        if (!(length > 0.0))
            throw config_error("grid length must be positive");
    }

    int size() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return length_ / n_; }
    double node(int j) const { return length_ * j / n_; }

    int mode_of_bin(int i) const { return i <= n_ / 2 ? i : i - n_; }
    double wavenumber_of_bin(int i) const {
        return 2.0 * pi * mode_of_bin(i) / length_;
    }
    int nyquist_bin() const { return n_ / 2; }

    std::vector<double> nodes() const {
        std::vector<double> x(n_);
        for (int j = 0; j < n_; ++j) x[j] = node(j);
        return x;
    }
    std::vector<double> wavenumbers() const {
        std::vector<double> k(n_);
        for (int i = 0; i < n_; ++i) k[i] = wavenumber_of_bin(i);
        return k;
    }

    bool operator==(const PeriodicGrid&) const = default;

private:
    int n_;
    double length_;
};

}  // namespace splitwave
