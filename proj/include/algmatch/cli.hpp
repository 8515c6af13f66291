#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace algmatch::cli {

enum class Command { kPmTest, kPmFind, kExactProfile, kExactFind, kLmpTest, kLmpProfile, kLmpFind };

/// "pm-test" etc.; nullopt for an unknown name.
std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

struct RunConfig {
  Command command = Command::kPmTest;
  std::string input_path;
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;
  std::optional<long long> k;
  int retries = 3;
  bool oracle = false;
};

inline constexpr int kExitFeasible = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

/// Runs one command. Writes the verdict and details to `out`, one-line error
/// messages to `err`, and returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace algmatch::cli
