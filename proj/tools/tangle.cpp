#include "tangle/cli.hpp"

int main(int argc, char** argv) { return tangle::cli::run(argc, argv); }
