#include "ramlab/cli.hpp"

int main(int argc, char** argv) { return ramlab::cli::main_entry(argc, argv); }
