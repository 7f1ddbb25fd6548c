#pragma once

namespace sigx {

// Full command-line entry point. Exit codes: 0 success, 2 bad input or
// configuration, 3 domain failures (alphabet depth, integrability,
// resource budget, evaluation). Errors go to stderr as one JSON object.
int run_cli(int argc, const char* const* argv);

}  // namespace sigx
