#include "symheat/cli.hpp"

int main(int argc, char** argv) { return symheat::cli::main_entry(argc, argv); }
