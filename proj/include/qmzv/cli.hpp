#pragma once

#include <ostream>

namespace qmzv {

enum ExitCode : int {
    exit_ok = 0,
    exit_bad_arguments = 1,
    exit_budget = 2,
    exit_unsupported = 3,
    exit_verify_failed = 4,
    exit_internal = 5,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmzv
