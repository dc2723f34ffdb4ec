#include "originlab/cli.hpp"

int main(int argc, char** argv) { return originlab::cli::dispatch(argc, argv); }
