#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chelly {

enum ExitCode : int
{
    exit_ok = 0,
    exit_violation = 1,
    exit_refuted = 2,
    exit_scale = 3,
    exit_input = 4,
};

/**
 * The chelly command line. args excludes the program name. Writes one JSON
 * report (or a human table with --pretty) to out, diagnostics to err.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chelly
