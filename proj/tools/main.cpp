#include <pathdist/cli.hpp>

int main(int argc, char** argv) { return pathdist::run_cli(argc, argv); }
