#pragma once

#include <string>
#include <vector>

namespace palab::cli {

/// Parses and runs one command line (argv[0] excluded). Exit codes:
/// 0 success, 1 input/usage error, 2 capacity error.
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

}  // namespace palab::cli
