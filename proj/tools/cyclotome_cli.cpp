#include "cyclotome/cli.hpp"

int main(int argc, char** argv) { return cyclotome::cli_main(argc, argv); }
