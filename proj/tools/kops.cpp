#include "kops/cli.hpp"

int main(int argc, char** argv) { return kops::run_cli(argc, argv); }
