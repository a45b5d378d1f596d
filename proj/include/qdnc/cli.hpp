#pragma once

#include <iostream>
#include <string>
#include <vector>

// Command-line surface. run() is the whole program minus main(), taking
// the argument vector (without argv[0]) and the output streams, so tests
// can drive every command in-process.
//
// Exit codes: 0 success, 1 invalid state, 2 bad arguments, 3 numeric
// failure.

namespace qdnc::cli {

inline constexpr const char* tool_version = "0.1.0";

int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace qdnc::cli
