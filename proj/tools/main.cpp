#include "rinv/cli.hpp"

int main(int argc, char** argv) { return rinv::run_cli(argc, argv); }
