#include "rectcount/cli.hpp"

int main(int argc, char** argv) { return rectcount::cli::run_cli(argc, argv); }
