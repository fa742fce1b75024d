#include "rainbowkit/cli.hpp"

int main(int argc, char** argv) { return rainbow::cli_main(argc, argv); }
