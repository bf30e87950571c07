#include "affweyl/cli.hpp"

int main(int argc, char** argv) { return affweyl::cli::run_main(argc, argv); }
