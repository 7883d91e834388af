#include "hvkit/cli.hpp"

int main(int argc, char** argv) { return hvkit::run_cli(argc, argv); }
