#include "harmap_cli/cli.hpp"

int main(int argc, char** argv) { return harmap::cli::run(argc, argv); }
