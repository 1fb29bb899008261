#include "lmbeta/cli.hpp"

int main(int argc, char** argv) { return lmbeta::cli::run(argc, argv); }
