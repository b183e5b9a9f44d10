#include "cli/cli.hpp"

int main(int argc, char** argv) { return birank::cli::run(argc, argv); }
