#include "cmlv/cli.hpp"

int main(int argc, char** argv) { return cmlv::cli_main(argc, argv); }
