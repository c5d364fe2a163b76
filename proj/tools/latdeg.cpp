#include "latdeg/cli.hpp"

int main(int argc, char** argv) { return latdeg::cli::main(argc, argv, std::cout, std::cerr); }
