// Command-line front end.  Subcommands are registered as the corresponding
// verification modules land; for now this only reports the toolkit version.
#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for queer Lie superalgebra structures"};
  app.set_version_flag("--version", "0.1");
  CLI11_PARSE(app, argc, argv);
  std::puts("no subcommand given; run with --help");
  return 0;
}
