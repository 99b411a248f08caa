#ifndef ERE_CLI_HPP_
#define ERE_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ere/alphabet.hpp"
#include "ere/containment.hpp"
#include "ere/syntax.hpp"

namespace ere::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kError = 2,
  kOracleDisagrees = 3,
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> expressions;
  std::string word;      // match
  std::string by;        // derive
  std::string kind = "auto";
  std::string alphabet = "unicode";
  std::string trace_path;
  std::uint64_t fuel = std::uint64_t{1} << 20;
  bool no_axioms = false;
  bool global_memo = true;
  bool oracle_check = false;
  bool raw_metrics = false;
  bool stats = false;
};

// `bitset:<chars>`, `unicode` or `cofinite`. Throws std::invalid_argument.
std::unique_ptr<Algebra> make_algebra(std::string_view spec);

// One trace line: {rule, lhs, rhs, literal, depth}.
nlohmann::ordered_json trace_json(const ExprPool& pool, const TraceEvent& event);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ere::cli

#endif  // ERE_CLI_HPP_
