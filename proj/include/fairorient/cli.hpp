#pragma once

namespace fairorient {

// Parses argv and runs one subcommand. Exit status: 0 when the queried
// property holds / an object was produced, 1 for a definite negative answer
// (notion fails, nothing exists, reduction sides disagree), 2 for bad input
// or an internal limit.
int run_cli(int argc, char** argv);

}  // namespace fairorient
