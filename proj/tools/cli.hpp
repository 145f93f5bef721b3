#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffc::cli {

enum class Status { yes, no, unknown, error };

/// yes -> 0, no -> 1, unknown -> 2, error -> 3.
int exit_code(Status s);

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffc::cli
