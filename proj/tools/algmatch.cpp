#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "algmatch/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Randomized algebraic matching: perfect, exact-weight and matroid parity"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string command;
  algmatch::cli::RunConfig config;
  std::uint64_t prime = 0;
  long long k = 0;

  app.add_option("command", command,
                 "pm-test | pm-find | exact-profile | exact-find | lmp-test | lmp-profile | lmp-find")
      ->required();
  app.add_option("input", config.input_path, "graph or LMP file")->required();
  auto* prime_opt = app.add_option("--prime", prime, "odd prime modulus (default: smallest prime above max(2^20, 4n^3))");
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  auto* k_opt = app.add_option("--k", k, "target weight for exact-find");
  app.add_option("--retries", config.retries, "resample cap")->capture_default_str();
  app.add_flag("--oracle", config.oracle, "cross-check against brute-force enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : algmatch::cli::kExitError;
  }

  const auto parsed = algmatch::cli::parse_command(command);
  if (!parsed) {
    std::cerr << "error: unknown command \"" << command << "\"\n";
    return algmatch::cli::kExitError;
  }
  config.command = *parsed;
  if (*prime_opt) config.prime = prime;
  if (*k_opt) config.k = k;
  return algmatch::cli::run(config, std::cout, std::cerr);
}
