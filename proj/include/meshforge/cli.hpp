#pragma once

#include <string>
#include <vector>

namespace meshforge {

// Entry point behind the meshforge binary; returns the process exit code:
// 0 success, 1 verification failure, 2 usage error.
int run_command(const std::vector<std::string>& argv, std::string& out, std::string& err);
int run_command(int argc, char** argv);

}  // namespace meshforge
