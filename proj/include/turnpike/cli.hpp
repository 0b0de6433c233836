#pragma once

namespace turnpike {

// Exit codes: 0 success, 1 configuration/validation error, 2 solver failure,
// 3 certificate or verification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace turnpike
