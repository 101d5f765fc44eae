#include "gcsub/cli.hpp"

int main(int argc, char** argv) { return gcsub::cli::run(argc, argv); }
