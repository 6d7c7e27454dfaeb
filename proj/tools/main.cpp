#include "cli.hpp"

int main(int argc, char **argv) { return zl::cli::dispatch(argc, argv); }
