#pragma once

namespace cw {

// Parses and runs one command line.  Exit codes: 0 all checks passed,
// 1 a verification failed, 2 parameters infeasible, 3 search inconclusive,
// 4 usage error.
int run_cli(int argc, char** argv);

}  // namespace cw
