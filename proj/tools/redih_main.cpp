#include "redih/commands.hpp"

int main(int argc, char** argv) { return redih::run_cli(argc, argv); }
