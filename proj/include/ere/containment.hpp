#ifndef ERE_CONTAINMENT_HPP_
#define ERE_CONTAINMENT_HPP_

// Containment of extended regular expressions by coinductive unfolding.
//
// A query r ⊑ s is answered by exploring inequalities depth first. At each
// inequality the rules are tried in a fixed order:
//
//   disprove        ν(r) ∧ ¬ν(s)                       → false
//   prove-identity  r = s                              → true   (axiom)
//   prove-empty     r = ∅                              → true   (axiom)
//   prove-nullable  r = ε ∧ ν(s)                       → true   (axiom)
//   disprove-empty  s = ∅ ∧ ⟦r⟧ ≠ ∅                    → false  (axiom)
//   cycle           (r, s) already assumed             → true
//   unfold          assume (r, s); for A ∈ next(r) ⋉ next(s), check
//                   ∂_A r ⊑ ∂_A s; false on the first failing branch
//
// A failing query yields a witness word in ⟦r⟧ \ ⟦s⟧ built from the least
// symbol of every literal on the failing branch.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

#include "ere/derivative.hpp"
#include "ere/next.hpp"
#include "ere/syntax.hpp"

namespace ere {

struct CheckOptions {
  // Enables the prove-* / disprove-empty shortcuts.
  bool axioms = true;
  // Keep every unfolded inequality as an assumption for the rest of the
  // query, instead of only those on the current branch.
  bool global_memo = true;
  // Maximum number of unfold steps (plus emptiness-search states).
  std::uint64_t fuel = std::uint64_t{1} << 20;
};

enum class Rule : std::uint8_t {
  kDisprove,
  kCycle,
  kUnfold,
  kProveIdentity,
  kProveEmpty,
  kProveNullable,
  kDisproveEmpty,
};

std::string_view rule_name(Rule rule);

struct TraceEvent {
  Rule rule;
  Ere lhs;
  Ere rhs;
  // The literal whose derivative produced this inequality; empty at the root.
  std::optional<SymbolSet> literal;
  std::size_t depth;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct CheckStats {
  std::uint64_t visited_pairs = 0;
  std::size_t max_depth = 0;
};

struct Verdict {
  bool holds = true;
  std::optional<std::u32string> witness;  // present iff !holds
  CheckStats stats;
};

class FuelExhausted : public std::runtime_error {
 public:
  explicit FuelExhausted(const CheckStats& stats);
  const CheckStats& stats() const { return stats_; }

 private:
  CheckStats stats_;
};

// Single-owner: one query at a time. Distinct checkers (with distinct
// pools) may run concurrently.
class Checker {
 public:
  explicit Checker(ExprPool& pool, CheckOptions options = {});

  void set_trace(TraceSink sink) { trace_ = std::move(sink); }
  const CheckOptions& options() const { return options_; }

  // Decides ⟦r⟧ ⊆ ⟦s⟧. Throws FuelExhausted instead of guessing.
  Verdict check(Ere r, Ere s);
  // ⟦r⟧ = ⟦s⟧, as check(r, s) followed by check(s, r).
  Verdict equivalent(Ere r, Ere s);
  bool membership(std::u32string_view word, Ere r);

  // Shortest word of ⟦r⟧, if any, by breadth-first search over derivatives.
  std::optional<std::u32string> shortest_word(Ere r);

  ExprPool& pool() { return pool_; }
  Derivatives& derivatives() { return derivatives_; }
  NextLiterals& next_literals() { return next_; }

 private:
  struct Frame {
    Ere lhs;
    Ere rhs;
    LiteralPartition literals;
    std::size_t cursor = 0;
  };
  enum class Step { kTrue, kFalse, kOpened };

  Step visit(Ere r, Ere s, const SymbolSet* literal);
  void emit(Rule rule, Ere r, Ere s, const SymbolSet* literal);
  std::u32string path_word() const;
  void spend_fuel();

  static std::uint64_t key(Ere r, Ere s) {
    return (static_cast<std::uint64_t>(r.id()) << 32) | s.id();
  }

  ExprPool& pool_;
  CheckOptions options_;
  Derivatives derivatives_;
  NextLiterals next_;
  TraceSink trace_;

  // Per-query state.
  std::unordered_set<std::uint64_t> assumed_;
  std::vector<Frame> stack_;
  std::vector<SymbolSet> path_;
  std::optional<std::u32string> witness_;
  CheckStats stats_;
  std::uint64_t spent_ = 0;
};

}  // namespace ere

#endif  // ERE_CONTAINMENT_HPP_
