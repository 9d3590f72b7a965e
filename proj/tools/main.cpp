#include "scrollsmith/cli.hpp"

int main(int argc, char** argv) { return scrollsmith::cli::run(argc, argv); }
