#include "ere/containment.hpp"

#include <deque>
#include <unordered_map>

namespace ere {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kDisprove:
      return "disprove";
    case Rule::kCycle:
      return "cycle";
    case Rule::kUnfold:
      return "unfold";
    case Rule::kProveIdentity:
      return "prove-identity";
    case Rule::kProveEmpty:
      return "prove-empty";
    case Rule::kProveNullable:
      return "prove-nullable";
    case Rule::kDisproveEmpty:
      return "disprove-empty";
  }
  return "unknown";
}

FuelExhausted::FuelExhausted(const CheckStats& stats)
    : std::runtime_error("fuel exhausted after " + std::to_string(stats.visited_pairs) +
                         " visited pairs (max depth " + std::to_string(stats.max_depth) + ")"),
      stats_(stats) {}

Checker::Checker(ExprPool& pool, CheckOptions options)
    : pool_(pool), options_(options), derivatives_(pool), next_(pool) {}

void Checker::emit(Rule rule, Ere r, Ere s, const SymbolSet* literal) {
  if (!trace_) return;
  TraceEvent event{rule, r, s, std::nullopt, stack_.size()};
  if (literal != nullptr) event.literal = *literal;
  trace_(event);
}

void Checker::spend_fuel() {
  if (++spent_ > options_.fuel) throw FuelExhausted(stats_);
}

std::u32string Checker::path_word() const {
  std::u32string word;
  for (const SymbolSet& a : path_) word.push_back(pool_.algebra().pick_witness(a));
  return word;
}

Checker::Step Checker::visit(Ere r, Ere s, const SymbolSet* literal) {
  if (pool_.nullable(r) && !pool_.nullable(s)) {
    emit(Rule::kDisprove, r, s, literal);
    witness_ = path_word();
    return Step::kFalse;
  }
  if (options_.axioms) {
    if (r == s) {
      emit(Rule::kProveIdentity, r, s, literal);
      return Step::kTrue;
    }
    if (r == pool_.empty()) {
      emit(Rule::kProveEmpty, r, s, literal);
      return Step::kTrue;
    }
    if (r == pool_.epsilon() && pool_.nullable(s)) {
      emit(Rule::kProveNullable, r, s, literal);
      return Step::kTrue;
    }
    // next(r) ≠ {} does not by itself make ⟦r⟧ non-empty (a&!a), so the
    // shortcut only fires once a word of r has been found.
    if (s == pool_.empty() && !next_.of(r).empty()) {
      if (auto completion = shortest_word(r)) {
        emit(Rule::kDisproveEmpty, r, s, literal);
        witness_ = path_word() + *completion;
        return Step::kFalse;
      }
    }
  }
  const std::uint64_t k = key(r, s);
  if (assumed_.contains(k)) {
    emit(Rule::kCycle, r, s, literal);
    return Step::kTrue;
  }

  emit(Rule::kUnfold, r, s, literal);
  ++stats_.visited_pairs;
  spend_fuel();
  assumed_.insert(k);
  stack_.push_back(Frame{r, s, next_.of_inequality(r, s)});
  stats_.max_depth = std::max(stats_.max_depth, stack_.size() - 1);
  return Step::kOpened;
}

Verdict Checker::check(Ere r, Ere s) {
  assumed_.clear();
  stack_.clear();
  path_.clear();
  witness_.reset();
  stats_ = {};
  spent_ = 0;

  auto fail = [this] {
    Verdict v{false, std::move(witness_), stats_};
    stack_.clear();
    path_.clear();
    assumed_.clear();
    return v;
  };

  Step step = visit(r, s, nullptr);
  if (step == Step::kFalse) return fail();

  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.cursor == top.literals.size()) {
      if (!options_.global_memo) assumed_.erase(key(top.lhs, top.rhs));
      stack_.pop_back();
      if (!path_.empty()) path_.pop_back();
      continue;
    }
    const SymbolSet literal = top.literals.literals()[top.cursor++];
    const Ere dr = derivatives_.by_literal(literal, top.lhs);
    const Ere ds = derivatives_.by_literal(literal, top.rhs);
    path_.push_back(literal);
    step = visit(dr, ds, &path_.back());
    if (step == Step::kFalse) return fail();
    if (step == Step::kTrue) path_.pop_back();
  }
  assumed_.clear();
  return Verdict{true, std::nullopt, stats_};
}

Verdict Checker::equivalent(Ere r, Ere s) {
  Verdict forward = check(r, s);
  if (!forward.holds) return forward;
  Verdict backward = check(s, r);
  backward.stats.visited_pairs += forward.stats.visited_pairs;
  backward.stats.max_depth = std::max(backward.stats.max_depth, forward.stats.max_depth);
  return backward;
}

bool Checker::membership(std::u32string_view word, Ere r) {
  return pool_.nullable(derivatives_.by_word(word, r));
}

std::optional<std::u32string> Checker::shortest_word(Ere r) {
  struct Visit {
    Ere parent;
    Symbol symbol;
  };
  std::unordered_map<Ere, Visit, EreHash> seen{{r, {r, 0}}};
  std::deque<Ere> queue{r};
  while (!queue.empty()) {
    const Ere current = queue.front();
    queue.pop_front();
    if (pool_.nullable(current)) {
      std::u32string word;
      for (Ere at = current; at != r; at = seen.at(at).parent) word.push_back(seen.at(at).symbol);
      return std::u32string(word.rbegin(), word.rend());
    }
    spend_fuel();
    const LiteralPartition literals = next_.of(current);
    for (const SymbolSet& a : literals) {
      const Ere d = derivatives_.by_literal(a, current);
      if (d == pool_.empty() || seen.contains(d)) continue;
      seen.emplace(d, Visit{current, pool_.algebra().pick_witness(a)});
      queue.push_back(d);
    }
  }
  return std::nullopt;
}

}  // namespace ere
