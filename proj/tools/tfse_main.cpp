#include "tfse/cli.hpp"

int main(int argc, char** argv) { return tfse::cli_main(argc, argv); }
