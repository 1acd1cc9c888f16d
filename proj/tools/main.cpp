#include "cli.hpp"

int main(int argc, char** argv) { return wavefeas::run_cli(argc, argv); }
