// ccgv: build, verify, and export commuting-conjugacy-class-graph data for
// the implemented group families.

#include "ccg/cli.hpp"

int main(int argc, char** argv) { return ccg::run_cli(argc, argv); }
