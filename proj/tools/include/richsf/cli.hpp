#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace richsf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // a verification or assertion failed
inline constexpr int kUsage = 2;    // bad arguments or input

// Caps --workers when set to a positive integer.
inline constexpr const char* kMaxWorkersEnv = "RICHSF_MAX_WORKERS";

// Runs one invocation. args excludes the program name. Results go to out,
// diagnostics and progress to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace richsf::cli
