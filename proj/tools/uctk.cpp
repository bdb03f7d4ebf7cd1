#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "uctk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Trees of uniform cofinalities: kernel queries and invariant checks", "uctk"};
  uctk::cli::Options opts;
  std::string format = "text";
  app.add_flag("--pretty", opts.pretty, "Human-readable tables");
  app.add_option("--seed", opts.seed, "Seed for randomized corpora")->default_val(0);
  app.add_option("--bound", opts.bound, "Size bound for enumerations and check-lemmas")->default_val(4);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}))->default_val("text");
  app.allow_extras();
  app.positionals_at_end(false);
  app.footer("Run `uctk <command> ...`; see README.md for commands and grammar.");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  opts.format = format == "structured" ? uctk::cli::Format::Structured : uctk::cli::Format::Text;
  std::vector<std::string> args = app.remaining();

  if (!args.empty() && args[0] == "batch") {
    if (args.size() != 2) {
      std::cerr << "batch expects exactly one file\n";
      return 2;
    }
    std::ifstream in(args[1]);
    if (!in) {
      std::cerr << "cannot read " << args[1] << "\n";
      return 2;
    }
    return uctk::cli::run_batch(in, opts, std::cout);
  }
  const uctk::cli::Report rep = uctk::cli::run(args, opts);
  std::cout << uctk::cli::render(rep, opts) << '\n';
  return rep.status;
}
