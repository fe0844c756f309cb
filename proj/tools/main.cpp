#include "nhsw/cli.hpp"

int main(int argc, char** argv) { return nhsw::run_cli(argc, argv); }
