#include "sigexpand/cli.hpp"

int main(int argc, char** argv) { return sigx::run_cli(argc, argv); }
