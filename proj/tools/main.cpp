#include "cli.hpp"

int main(int argc, char** argv) { return bicq::cli::run(argc, argv); }
