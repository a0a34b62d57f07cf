#include "subsemigroup/cli.hpp"

int main(int argc, char** argv) { return subsemigroup::cli::main(argc, argv); }
