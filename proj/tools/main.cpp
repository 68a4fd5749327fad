#include "gridtop/verify.hpp"

int main(int argc, char** argv) { return gridtop::run_cli(argc, argv); }
