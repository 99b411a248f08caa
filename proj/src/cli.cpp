#include "ere/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "ere/derivative.hpp"
#include "ere/next.hpp"
#include "ere/oracle.hpp"
#include "ere/parser.hpp"

namespace ere::cli {

namespace {

// Largest oracle bound (at most 8) whose Σ^{≤N} stays small.
std::size_t oracle_bound(const Algebra& algebra) {
  const auto* bits = dynamic_cast<const BitsetAlgebra*>(&algebra);
  if (bits == nullptr || bits->universe().size() > kMaxOracleAlphabet) {
    throw OracleLimitError("--oracle-check needs a bitset alphabet of at most 8 symbols");
  }
  const std::size_t k = bits->universe().size();
  std::size_t bound = 0;
  std::size_t total = 1;
  std::size_t layer = 1;
  while (bound < 8) {
    layer *= k;
    if (total + layer > (std::size_t{1} << 16)) break;
    total += layer;
    ++bound;
  }
  return bound;
}

void report_parse_error(std::ostream& err, const ParseError& e, std::string_view text) {
  err << "error: " << e.what() << "\n  " << text << "\n  "
      << std::string(e.position(), ' ') << "^\n";
}

class Session {
 public:
  Session(const RunConfig& config, std::ostream& out, std::ostream& err)
      : config_(config), out_(out), err_(err) {}

  int run() {
    try {
      return dispatch();
    } catch (const ParseError& e) {
      report_parse_error(err_, e, parsing_);
      return kError;
    }
  }

 private:
  int dispatch() {
    algebra_ = make_algebra(config_.alphabet);
    pool_ = std::make_unique<ExprPool>(*algebra_);
    const std::string& sub = config_.subcommand;
    if (sub == "check" || sub == "trace") return check(false);
    if (sub == "equiv") return check(true);
    if (sub == "match") return match();
    if (sub == "derive") return derive();
    if (sub == "next") return next();
    if (sub == "metrics") return metrics();
    err_ << "error: unknown subcommand '" << sub << "'\n";
    return kError;
  }

  Ere parse_text(const std::string& text) {
    parsing_ = text;
    return parse(text, *pool_);
  }
  Ere expr(std::size_t i) { return parse_text(config_.expressions.at(i)); }

  int check(bool equivalence) {
    const Ere lhs = expr(0);
    const Ere rhs = expr(1);
    CheckOptions options;
    options.axioms = !config_.no_axioms;
    options.global_memo = config_.global_memo;
    options.fuel = config_.fuel;
    Checker checker(*pool_, options);

    std::ofstream trace_file;
    std::ostream* trace_out = nullptr;
    if (config_.subcommand == "trace") trace_out = &out_;
    if (!config_.trace_path.empty()) {
      trace_file.open(config_.trace_path);
      if (!trace_file) {
        err_ << "error: cannot open trace file " << config_.trace_path << "\n";
        return kError;
      }
      trace_out = &trace_file;
    }
    if (trace_out != nullptr) {
      checker.set_trace([this, trace_out](const TraceEvent& e) {
        *trace_out << trace_json(*pool_, e).dump() << "\n";
      });
    }

    Verdict verdict;
    try {
      verdict = equivalence ? checker.equivalent(lhs, rhs) : checker.check(lhs, rhs);
    } catch (const FuelExhausted& e) {
      err_ << "error: " << e.what() << "\n";
      return kError;
    }

    // `trace` keeps stdout for the JSON lines.
    std::ostream& report = config_.subcommand == "trace" ? err_ : out_;
    if (verdict.holds) {
      report << (equivalence ? "EQUIVALENT" : "HOLDS") << "\n";
    } else {
      report << (equivalence ? "DIFFERS" : "FAILS") << " witness=" << format_word(*verdict.witness)
             << "\n";
    }
    if (config_.stats) {
      err_ << "visited=" << verdict.stats.visited_pairs << " depth=" << verdict.stats.max_depth
           << "\n";
    }
    if (config_.oracle_check && !agrees_with_oracle(checker, lhs, rhs, equivalence, verdict)) {
      return kOracleDisagrees;
    }
    return verdict.holds ? kHolds : kFails;
  }

  bool agrees_with_oracle(Checker& checker, Ere lhs, Ere rhs, bool equivalence,
                          const Verdict& verdict) {
    const std::size_t bound = oracle_bound(*algebra_);
    if (verdict.holds) {
      const bool ok = equivalence ? slice_equal(*pool_, lhs, rhs, bound)
                                  : slice_subset(*pool_, lhs, rhs, bound);
      if (!ok) err_ << "oracle: slices up to length " << bound << " contradict the verdict\n";
      return ok;
    }
    const std::u32string& w = *verdict.witness;
    const bool in_lhs = checker.membership(w, lhs);
    const bool in_rhs = checker.membership(w, rhs);
    bool ok = equivalence ? in_lhs != in_rhs : in_lhs && !in_rhs;
    if (ok && w.size() <= bound) {
      const bool slice_lhs = slice(*pool_, lhs, bound).contains(w);
      const bool slice_rhs = slice(*pool_, rhs, bound).contains(w);
      ok = slice_lhs == in_lhs && slice_rhs == in_rhs;
    }
    if (!ok) err_ << "oracle: witness " << format_word(w) << " does not separate the languages\n";
    return ok;
  }

  int match() {
    const std::u32string word = parse_word(config_.word);
    const Ere r = expr(0);
    Derivatives derivatives(*pool_);
    const bool matched = pool_->nullable(derivatives.by_word(word, r));
    out_ << (matched ? "MATCH" : "NO MATCH") << "\n";
    if (config_.oracle_check) {
      const std::size_t bound = oracle_bound(*algebra_);
      if (word.size() <= bound && slice(*pool_, r, bound).contains(word) != matched) {
        err_ << "oracle: slice membership disagrees\n";
        return kOracleDisagrees;
      }
    }
    return matched ? kHolds : kFails;
  }

  int derive() {
    const Ere by = parse_text(config_.by);
    if (pool_->op(by) != Op::kLiteral) {
      err_ << "error: --by expects a character or a class, got " << config_.by << "\n";
      return kError;
    }
    const SymbolSet& a = pool_->set(by);
    const Ere r = expr(0);
    Derivatives derivatives(*pool_);
    Ere result;
    const std::string& kind = config_.kind;
    if (kind == "pos") {
      result = derivatives.positive(a, r);
    } else if (kind == "neg") {
      result = derivatives.negative(a, r);
    } else if (kind == "symbol") {
      if (algebra_->is_empty(a)) {
        err_ << "error: --by denotes the empty set\n";
        return kError;
      }
      result = derivatives.by_symbol(algebra_->pick_witness(a), r);
    } else {
      if (algebra_->is_empty(a)) {
        err_ << "error: --by denotes the empty set\n";
        return kError;
      }
      if (!within_next_literal(*pool_, a, r)) {
        err_ << "error: " << algebra_->format(a)
             << " splits a next literal of the expression; use --kind pos|neg|symbol\n";
        return kError;
      }
      result = derivatives.by_literal(a, r);
    }
    out_ << pool_->to_string(result) << "\n";
    return kHolds;
  }

  int next() {
    NextLiterals next(*pool_);
    for (const SymbolSet& a : next.of(expr(0))) out_ << algebra_->format(a) << "\n";
    return kHolds;
  }

  int metrics() {
    Metrics m;
    if (config_.raw_metrics) {
      parsing_ = config_.expressions.at(0);
      m = raw_metrics(parse_raw(parsing_, *algebra_));
    } else {
      const Ere r = expr(0);
      m = {pool_->size(r), pool_->width(r)};
    }
    out_ << "size=" << m.size << " width=" << m.width << "\n";
    return kHolds;
  }

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<Algebra> algebra_;
  std::unique_ptr<ExprPool> pool_;
  std::string parsing_;
};

}  // namespace

std::unique_ptr<Algebra> make_algebra(std::string_view spec) {
  if (spec == "unicode") return std::make_unique<IntervalAlgebra>();
  if (spec == "cofinite") return std::make_unique<FiniteCofiniteAlgebra>();
  if (spec.starts_with("bitset:")) {
    return std::make_unique<BitsetAlgebra>(decode_utf8(spec.substr(7)));
  }
  throw std::invalid_argument("unknown alphabet '" + std::string(spec) +
                              "'; expected bitset:<chars>, unicode or cofinite");
}

nlohmann::ordered_json trace_json(const ExprPool& pool, const TraceEvent& event) {
  nlohmann::ordered_json j;
  j["rule"] = std::string(rule_name(event.rule));
  j["lhs"] = pool.to_string(event.lhs);
  j["rhs"] = pool.to_string(event.rhs);
  j["literal"] = event.literal ? nlohmann::ordered_json(pool.algebra().format(*event.literal))
                               : nlohmann::ordered_json(nullptr);
  j["depth"] = event.depth;
  return j;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return Session(config, out, err).run();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Containment and equivalence of extended regular expressions", "erecheck"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--alphabet", config.alphabet, "bitset:<chars> | unicode | cofinite")
      ->capture_default_str();
  app.add_option("--trace-json", config.trace_path, "Write one JSON object per rule application");
  app.add_flag("--no-axioms", config.no_axioms, "Disable the prove/disprove shortcuts");
  app.add_option("--global-memo", config.global_memo,
                 "Keep all unfolded pairs as assumptions (default true)")
      ->capture_default_str();
  app.add_option("--fuel", config.fuel, "Maximum number of unfold steps")->capture_default_str();
  app.add_flag("--oracle-check", config.oracle_check,
               "Cross-check the verdict against bounded language slices");
  app.add_flag("--raw-metrics", config.raw_metrics, "metrics: measure the tree as written");
  app.add_flag("--stats", config.stats, "Print visited pairs and depth to stderr");

  std::string lhs, rhs, expr;
  auto* check = app.add_subcommand("check", "Decide lhs ⊆ rhs");
  check->add_option("lhs", lhs)->required();
  check->add_option("rhs", rhs)->required();
  auto* equiv = app.add_subcommand("equiv", "Decide lhs = rhs");
  equiv->add_option("lhs", lhs)->required();
  equiv->add_option("rhs", rhs)->required();
  auto* trace = app.add_subcommand("trace", "Like check, printing the JSON trace to stdout");
  trace->add_option("lhs", lhs)->required();
  trace->add_option("rhs", rhs)->required();
  auto* match = app.add_subcommand("match", "Test whether a word matches");
  match->add_option("word", config.word)->required();
  match->add_option("expr", expr)->required();
  auto* derive = app.add_subcommand("derive", "Print the derivative by a character or class");
  derive->add_option("--by", config.by, "Character or class")->required();
  derive->add_option("--kind", config.kind, "auto | symbol | pos | neg")
      ->check(CLI::IsMember({"auto", "symbol", "pos", "neg"}))
      ->capture_default_str();
  derive->add_option("expr", expr)->required();
  auto* next = app.add_subcommand("next", "Print the next literals, one per line");
  next->add_option("expr", expr)->required();
  auto* metrics = app.add_subcommand("metrics", "Print expression size and literal width");
  metrics->add_option("expr", expr)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (config.subcommand == "check" || config.subcommand == "equiv" ||
      config.subcommand == "trace") {
    config.expressions = {lhs, rhs};
  } else {
    config.expressions = {expr};
  }
  return run(config, out, err);
}

}  // namespace ere::cli
