#include "cli.hpp"

int main(int argc, char** argv) { return aarf::cli::run(argc, argv); }
