#include "floq/cli.hpp"

int main(int argc, char** argv) { return floq::cli::run_main(argc, argv); }
