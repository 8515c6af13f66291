#include "algmatch/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <utility>
#include <variant>

#include "algmatch/error.hpp"
#include "algmatch/gf.hpp"
#include "algmatch/graph.hpp"
#include "algmatch/lmp.hpp"
#include "algmatch/matching.hpp"
#include "algmatch/oracle.hpp"

namespace algmatch::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 7> kCommandNames{{
    {Command::kPmTest, "pm-test"},
    {Command::kPmFind, "pm-find"},
    {Command::kExactProfile, "exact-profile"},
    {Command::kExactFind, "exact-find"},
    {Command::kLmpTest, "lmp-test"},
    {Command::kLmpProfile, "lmp-profile"},
    {Command::kLmpFind, "lmp-find"},
}};

bool is_lmp_command(Command c) {
  return c == Command::kLmpTest || c == Command::kLmpProfile || c == Command::kLmpFind;
}

PrimeModulus choose_prime(const RunConfig& config, std::size_t n) {
  return config.prime ? PrimeModulus(*config.prime) : PrimeModulus::default_for(n);
}

void annotate(std::ostream& out, const PrimeModulus& mod, const RunConfig& config) {
  out << "monte-carlo p=" << mod.value() << " seed=" << config.seed << '\n';
}

void report_oracle(std::ostream& out, bool agree) { out << "oracle: " << (agree ? "agree" : "disagree") << '\n'; }

void report_infeasible(std::ostream& out, const Infeasible& inf) {
  out << (inf.probable ? "infeasible probable" : "infeasible") << '\n';
}

int run_graph(const RunConfig& config, std::istream& in, std::ostream& out) {
  const WeightedGraph g = parse_graph(in);
  const std::size_t n = g.vertex_count();
  const PrimeModulus mod = choose_prime(config, n);
  SeededRng rng(config.seed);
  const bool oracle = config.oracle && n <= oracle::kMaxMatchingVertices;
  auto skipped = [&] {
    if (config.oracle && !oracle) out << "oracle: skipped (instance exceeds enumeration guard)\n";
  };

  switch (config.command) {
    case Command::kPmTest: {
      const bool yes = has_perfect_matching(g, rng, mod);
      out << (yes ? "yes" : "no") << '\n';
      annotate(out, mod, config);
      if (oracle) report_oracle(out, yes == !oracle::enum_perfect_matchings(g).matchings.empty());
      skipped();
      return yes ? kExitFeasible : kExitInfeasible;
    }
    case Command::kPmFind:
    case Command::kExactFind: {
      MatchingOutcome outcome;
      std::optional<std::size_t> k;
      if (config.command == Command::kPmFind) {
        outcome = find_perfect_matching(g, rng, mod, config.retries);
      } else {
        if (*config.k < 0 || static_cast<std::size_t>(*config.k) > n / 2) {
          throw UsageError("--k " + std::to_string(*config.k) + " outside 0.." + std::to_string(n / 2));
        }
        k = static_cast<std::size_t>(*config.k);
        outcome = find_exact_matching(g, *k, rng, mod, config.retries);
      }
      const auto* found = std::get_if<MatchingResult>(&outcome);
      if (found) {
        out << "found weight=" << found->weight << '\n';
        for (const Edge& e : found->edges) out << e << '\n';
      } else {
        report_infeasible(out, std::get<Infeasible>(outcome));
      }
      annotate(out, mod, config);
      if (oracle) {
        const auto truth = oracle::enum_perfect_matchings(g);
        bool agree;
        if (found) {
          agree = is_perfect_matching(g, found->edges) && (!k || found->weight == static_cast<int>(*k));
        } else {
          agree = k ? !truth.weights.contains(static_cast<int>(*k)) : truth.matchings.empty();
        }
        report_oracle(out, agree);
      }
      skipped();
      return found ? kExitFeasible : kExitInfeasible;
    }
    case Command::kExactProfile: {
      const WeightProfile profile = weight_profile(g, rng, mod, config.retries);
      out << profile.to_string() << '\n';
      out << "pf " << profile.pf_poly << '\n';
      annotate(out, mod, config);
      if (oracle) report_oracle(out, profile.feasible == oracle::feasible_weights(g));
      skipped();
      return profile.any() ? kExitFeasible : kExitInfeasible;
    }
    default:
      break;
  }
  throw UsageError("not a graph command");
}

int run_lmp(const RunConfig& config, std::istream& in, std::ostream& out) {
  const LmpFile file = parse_lmp(in);
  const PrimeModulus mod = choose_prime(config, file.dimension);
  const LmpInstance inst = file.instance(mod);
  SeededRng rng(config.seed);
  const bool oracle = config.oracle && inst.line_count() <= oracle::kMaxLines &&
                      inst.dimension() <= oracle::kMaxLmpDimension;
  auto skipped = [&] {
    if (config.oracle && !oracle) out << "oracle: skipped (instance exceeds enumeration guard)\n";
  };
  auto truth = [&] { return oracle::enum_parity_bases(inst); };

  switch (config.command) {
    case Command::kLmpTest: {
      const bool yes = has_parity_base(inst, rng);
      out << (yes ? "yes" : "no") << '\n';
      annotate(out, mod, config);
      if (oracle) report_oracle(out, yes == !truth().empty());
      skipped();
      return yes ? kExitFeasible : kExitInfeasible;
    }
    case Command::kLmpProfile: {
      const WeightProfile profile = lmp_weight_profile(inst, rng, config.retries);
      out << profile.to_string() << '\n';
      out << "pf " << profile.pf_poly << '\n';
      annotate(out, mod, config);
      if (oracle) {
        std::vector<bool> expected(inst.dimension() / 2 + 1, false);
        for (const auto& base : truth()) expected[static_cast<std::size_t>(base.weight)] = true;
        report_oracle(out, profile.feasible == expected);
      }
      skipped();
      return profile.any() ? kExitFeasible : kExitInfeasible;
    }
    case Command::kLmpFind: {
      const ParityBaseOutcome outcome = find_parity_base(inst, rng, config.retries);
      const auto* lines = std::get_if<std::vector<std::size_t>>(&outcome);
      if (lines) {
        out << "found weight=" << inst.weight_of(*lines) << '\n';
        for (std::size_t l : *lines) out << l << '\n';
      } else {
        report_infeasible(out, std::get<Infeasible>(outcome));
      }
      annotate(out, mod, config);
      if (oracle) {
        const auto bases = truth();
        const bool agree = lines ? std::any_of(bases.begin(), bases.end(),
                                               [&](const oracle::ParityBase& b) { return b.lines == *lines; })
                                 : bases.empty();
        report_oracle(out, agree);
      }
      skipped();
      return lines ? kExitFeasible : kExitInfeasible;
    }
    default:
      break;
  }
  throw UsageError("not an LMP command");
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [cmd, text] : kCommandNames) {
    if (name == text) return cmd;
  }
  return std::nullopt;
}

const char* command_name(Command c) {
  for (const auto& [cmd, text] : kCommandNames) {
    if (cmd == c) return text;
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::kExactFind && !config.k) throw UsageError("exact-find requires --k");
    if (config.command != Command::kExactFind && config.k) {
      throw UsageError(std::string(command_name(config.command)) + " does not take --k");
    }
    if (config.retries < 0) throw UsageError("--retries must be non-negative");
    std::ifstream in(config.input_path);
    if (!in) throw UsageError("cannot read " + config.input_path);
    return is_lmp_command(config.command) ? run_lmp(config, in, out) : run_graph(config, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace algmatch::cli
