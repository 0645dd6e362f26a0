#include "splitwave/initial_conditions.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "splitwave/errors.hpp"
#include "splitwave/spectral.hpp"

namespace splitwave {
namespace {

double uniform01(std::mt19937_64& rng) {
    // Top 53 bits of the generator output; identical on every platform.
    return (rng() >> 11) * 0x1.0p-53;
}

Field sine_field(const InitialCondition& ic, const PeriodicGrid& grid) {
    if (ic.mode < 1 || ic.mode >= grid.size() / 2)
        throw config_error("sine mode must lie strictly inside the resolved band");
    std::vector<double> s(grid.size());
    for (int j = 0; j < grid.size(); ++j)
        s[j] = ic.amplitude * std::sin(2.0 * pi * ic.mode * grid.node(j) / grid.length());
    return Field::from_samples(grid, std::move(s));
}

Field gaussian_field(const InitialCondition& ic, const PeriodicGrid& grid) {
    if (!(ic.width > 0.0)) throw config_error("gaussian width must be positive");
    std::vector<double> s(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        // Nearest periodic image of the center.
        double d = std::fmod(grid.node(j) - ic.center, grid.length());
        if (d < -grid.length() / 2) d += grid.length();
        if (d >= grid.length() / 2) d -= grid.length();
        s[j] = ic.amplitude * std::exp(-d * d / (2.0 * ic.width * ic.width));
    }
    return Field::from_samples(grid, std::move(s));
}

Field random_bandlimited_field(const InitialCondition& ic, const PeriodicGrid& grid) {
    if (ic.max_mode < 1 || ic.max_mode >= grid.size() / 2)
        throw config_error("random band edge must lie strictly inside the "
                           "resolved band");
    std::mt19937_64 rng(ic.seed);
    std::vector<std::complex<double>> c(grid.size(), 0.0);
    for (int m = 1; m <= ic.max_mode; ++m) {
        const double re = uniform01(rng) - 0.5;
        const double im = uniform01(rng) - 0.5;
        c[m] = std::complex<double>(re, im);
        c[grid.size() - m] = std::conj(c[m]);
    }
    Field raw = Field::from_spectrum(grid, std::move(c));
    const double peak = linf_norm(raw);
    if (peak == 0.0) return raw;
    return scale(raw, ic.amplitude / peak);
}

}  // namespace

InitialCondition::Family InitialCondition::family_from_name(const std::string& name) {
    if (name == "sine") return Family::sine;
    if (name == "gaussian") return Family::gaussian;
    if (name == "soliton") return Family::soliton;
    if (name == "random-bandlimited") return Family::random_bandlimited;
    throw config_error("unknown initial-condition family: " + name);
}

Field soliton_profile(const PeriodicGrid& grid, double speed, double t) {
    if (!(speed > 0.0)) throw config_error("soliton speed must be positive");
    std::vector<double> s(grid.size());
    const double half_root = 0.5 * std::sqrt(speed);
    for (int j = 0; j < grid.size(); ++j) {
        double d = std::fmod(grid.node(j) - grid.length() / 2 + speed * t,
                             grid.length());
        if (d < -grid.length() / 2) d += grid.length();
        if (d >= grid.length() / 2) d -= grid.length();
        const double sech = 1.0 / std::cosh(half_root * d);
        s[j] = 3.0 * speed * sech * sech;
    }
    return Field::from_samples(grid, std::move(s));
}

Field make_field(const InitialCondition& ic, const PeriodicGrid& grid) {
    switch (ic.family) {
        case InitialCondition::Family::sine:
            return sine_field(ic, grid);
        case InitialCondition::Family::gaussian:
            return gaussian_field(ic, grid);
        case InitialCondition::Family::soliton:
            return soliton_profile(grid, ic.speed, 0.0);
        case InitialCondition::Family::random_bandlimited:
            return random_bandlimited_field(ic, grid);
    }
    throw config_error("unhandled initial-condition family");
}

}  // namespace splitwave
