// Command-line front door; subcommands are wired up in cli_commands.hpp.
#include "cli_commands.hpp"

int main(int argc, char** argv) { return sigraph::cli::run(argc, argv); }
