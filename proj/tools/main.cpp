#include "cli.hpp"

int main(int argc, char** argv) { return palab::cli::run(argc, argv); }
