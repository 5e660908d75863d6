#include "gkpw/cli.hpp"

int main(int argc, char** argv) { return gkpw::cli::run(argc, argv); }
