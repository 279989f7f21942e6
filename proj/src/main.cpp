#include "dsw/cli.hpp"

int main(int argc, char** argv) { return dsw::cli::run_main(argc, argv); }
