#pragma once

#include <string>
#include <vector>

namespace zcount::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 negative slack, 3 non-convergence, 64 usage
    std::string out;
    std::string err;
};

// Parses and executes one invocation; args exclude the program name.
RunResult run(const std::vector<std::string>& args);

}  // namespace zcount::cli
