#pragma once

#include <iosfwd>

#include "splitwave/config.hpp"

namespace splitwave {

// Subcommand bodies. Each returns the process exit code for non-exceptional
// outcomes (0 success, 2 validation or identity failure, 3 guard violation);
// config problems throw config_error and the caller maps them to exit 1.
int cmd_validate(const RunConfig& config, std::ostream& out);
int cmd_run(const RunConfig& config, std::ostream& out);
int cmd_converge(const RunConfig& config, std::ostream& out);
int cmd_local_error(const RunConfig& config, std::ostream& out);
int cmd_commutator_check(const RunConfig& config, std::ostream& out);

// Fixed-width decimal formatting used for every number we write to disk, so
// reruns are byte-comparable.
std::string format_double(double v);

}  // namespace splitwave
