#include "veegroups/cli.hpp"

int main(int argc, char** argv) { return veegroups::cli_main(argc, argv); }
