#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.h"

int main(int argc, char** argv) {
  using lcpbound::cli::Command;
  using lcpbound::cli::OutputFormat;

  lcpbound::cli::RunConfig config;
  std::string k_range = "1..10";
  std::string format = "table";
  std::size_t n = 0;

  CLI::App app{"Error-bound estimates for LCPs with B-matrices"};
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"check", "classify a matrix (exit 0 iff it is a B-matrix)", Command::kCheck},
      {"decompose", "print M = B+ + C", Command::kDecompose},
      {"bounds", "evaluate the four analytic bounds", Command::kBounds},
      {"verify", "compare the bounds with a sampled lower bound", Command::kVerify},
      {"lcp", "solve LCP(M, q) and check the error bound", Command::kLcp},
      {"reproduce", "tabulate the bounds on the 4x4 M_k family", Command::kReproduce},
      {"gen", "write a random B-matrix", Command::kGen},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->callback([&config, cmd = e.command] { config.command = cmd; });
    sub->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--seed", config.seed, "random seed");
    switch (e.command) {
      case Command::kReproduce:
        sub->add_option("--k", k_range, "inclusive range A..B");
        break;
      case Command::kGen:
        sub->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
        break;
      default:
        sub->add_option("--matrix", config.matrix_path, "matrix file ('-' for stdin)")
            ->required();
        sub->add_option("--samples", config.samples, "random samples / trials");
        if (e.command == Command::kLcp) {
          sub->add_option("--q", config.q_path, "q vector file")->required();
        }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lcpbound::cli::kExitUsage;
  }

  const auto range = lcpbound::cli::parse_k_range(k_range);
  if (!range) {
    std::cerr << "error: --k expects A..B with 1 <= A <= B\n";
    return lcpbound::cli::kExitUsage;
  }
  config.k_first = range->first;
  config.k_last = range->second;
  if (n > 0) config.n = n;
  config.output_format = format == "json" ? OutputFormat::kJson : OutputFormat::kTable;
  return lcpbound::cli::run(config, std::cout, std::cerr);
}
