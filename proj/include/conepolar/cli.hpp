#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conepolar {

/// Runs the command-line front end. Exit codes: 0 success, 1 a check or a
/// route comparison failed, 2 usage or model error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conepolar
