#pragma once

#include <cstdint>
#include <string>

#include "splitwave/field.hpp"

namespace splitwave {

// Named starting profiles. The random family draws Fourier coefficients from
// a fixed-width integer generator and owns its normalization, so a seed pins
// the field exactly across platforms and thread counts.
struct InitialCondition {
    enum class Family { sine, gaussian, soliton, random_bandlimited };

    Family family = Family::sine;
    double amplitude = 1.0;  // sine, gaussian, random-bandlimited (peak value)
    int mode = 1;            // sine
    double width = 1.0;      // gaussian standard deviation
    double center = 0.0;     // gaussian
    double speed = 0.25;     // soliton speed c
    int max_mode = 8;        // random-bandlimited
    std::uint64_t seed = 0;  // random-bandlimited

    static Family family_from_name(const std::string& name);
};

Field make_field(const InitialCondition& ic, const PeriodicGrid& grid);

// The KdV traveling wave 3c sech^2(sqrt(c)/2 (x - L/2 + c t)), moving left
// with speed c. t = 0 gives the soliton initial condition.
Field soliton_profile(const PeriodicGrid& grid, double speed, double t);

}  // namespace splitwave
