#include "reactsim/cli.hpp"

int main(int argc, char** argv) { return reactsim::cli_main(argc, argv); }
