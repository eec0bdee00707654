#include "discseq/cli.hpp"

int main(int argc, char** argv) { return discseq::cli::run(argc, argv); }
