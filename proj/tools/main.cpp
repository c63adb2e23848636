#include "compscal/cli.hpp"

int main(int argc, char** argv) { return compscal::cli_main(argc, argv); }
