#include "hopfdual/cli.hpp"

int main(int argc, char** argv) { return hopfdual::cli::run(argc, argv); }
