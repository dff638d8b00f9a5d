#include "joinortho/cli.hpp"

int main(int argc, char** argv) { return joinortho::cli::cli_main(argc, argv); }
