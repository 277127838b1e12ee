#include "fairorient/cli.hpp"

int main(int argc, char** argv) { return fairorient::run_cli(argc, argv); }
