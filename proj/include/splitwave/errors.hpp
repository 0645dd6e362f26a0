#pragma once

#include <stdexcept>
#include <string>

namespace splitwave {

// Bad input from outside the math: malformed configs, unknown keys, sizes that
// cannot form a grid, study specs whose dt values do not divide T.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical contract failed: the symbol amplifies a mode without an
// explicit acknowledgement, an identity check is out of tolerance, or the
// reference integrator fails its self-convergence requirement.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A runtime guard tripped while the math itself was well posed on entry:
// requested horizon too close to the shock time, fixed point stalled, or the
// state left the representable range mid-run.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace splitwave
