#include "fim/cli.hpp"

int main(int argc, char** argv) { return fim::cli::run(argc, argv); }
