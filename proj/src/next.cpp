#include "ere/next.hpp"

#include <algorithm>
#include <utility>

namespace ere {

LiteralPartition LiteralPartition::from(const Algebra& algebra, std::vector<SymbolSet> sets) {
  std::vector<std::pair<Symbol, SymbolSet>> keyed;
  keyed.reserve(sets.size());
  for (SymbolSet& s : sets) {
    if (algebra.is_empty(s)) continue;
    keyed.emplace_back(algebra.pick_witness(s), std::move(s));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  LiteralPartition out;
  for (auto& [least, set] : keyed) {
    if (!out.literals_.empty() && out.literals_.back() == set) continue;
    out.literals_.push_back(std::move(set));
  }
  return out;
}

SymbolSet LiteralPartition::coverage(const Algebra& algebra) const {
  SymbolSet acc = algebra.bottom();
  for (const SymbolSet& s : literals_) acc = algebra.unite(acc, s);
  return acc;
}

LiteralPartition join(const Algebra& algebra, const LiteralPartition& l1,
                      const LiteralPartition& l2) {
  const SymbolSet outside1 = algebra.complement(l1.coverage(algebra));
  const SymbolSet outside2 = algebra.complement(l2.coverage(algebra));
  std::vector<SymbolSet> out;
  for (const SymbolSet& a1 : l1) {
    for (const SymbolSet& a2 : l2) out.push_back(algebra.intersect(a1, a2));
    out.push_back(algebra.intersect(a1, outside2));
  }
  for (const SymbolSet& a2 : l2) out.push_back(algebra.intersect(outside1, a2));
  return LiteralPartition::from(algebra, std::move(out));
}

LiteralPartition left_join(const Algebra& algebra, const LiteralPartition& l1,
                           const LiteralPartition& l2) {
  const SymbolSet outside2 = algebra.complement(l2.coverage(algebra));
  std::vector<SymbolSet> out;
  for (const SymbolSet& a1 : l1) {
    for (const SymbolSet& a2 : l2) out.push_back(algebra.intersect(a1, a2));
    out.push_back(algebra.intersect(a1, outside2));
  }
  return LiteralPartition::from(algebra, std::move(out));
}

LiteralPartition meet(const Algebra& algebra, const LiteralPartition& l1,
                      const LiteralPartition& l2) {
  std::vector<SymbolSet> out;
  for (const SymbolSet& a1 : l1) {
    for (const SymbolSet& a2 : l2) out.push_back(algebra.intersect(a1, a2));
  }
  return LiteralPartition::from(algebra, std::move(out));
}

const LiteralPartition& NextLiterals::of(Ere r) {
  if (r.id() >= memo_.size()) memo_.resize(pool_.node_count());
  if (!memo_[r.id()]) {
    LiteralPartition computed = compute(r);
    if (r.id() >= memo_.size()) memo_.resize(pool_.node_count());
    memo_[r.id()] = std::make_unique<LiteralPartition>(std::move(computed));
  }
  return *memo_[r.id()];
}

LiteralPartition NextLiterals::of_inequality(Ere r, Ere s) {
  const LiteralPartition lhs = of(r);
  return left_join(pool_.algebra(), lhs, of(s));
}

LiteralPartition NextLiterals::compute(Ere r) {
  const Algebra& alg = pool_.algebra();
  switch (pool_.op(r)) {
    case Op::kEpsilon:
      return {};
    case Op::kLiteral:
      return LiteralPartition::from(alg, {pool_.set(r)});
    case Op::kUnion:
      return join(alg, LiteralPartition(of(pool_.lhs(r))), of(pool_.rhs(r)));
    case Op::kConcat:
      if (!pool_.nullable(pool_.lhs(r))) return of(pool_.lhs(r));
      return join(alg, LiteralPartition(of(pool_.lhs(r))), of(pool_.rhs(r)));
    case Op::kStar:
      return of(pool_.lhs(r));
    case Op::kAnd:
      return meet(alg, LiteralPartition(of(pool_.lhs(r))), of(pool_.rhs(r)));
    case Op::kNot: {
      // The meet of the complements is the complement of the coverage; over
      // an empty family it is ⊤.
      const LiteralPartition inner = of(pool_.lhs(r));
      std::vector<SymbolSet> sets = inner.literals();
      sets.push_back(alg.complement(inner.coverage(alg)));
      return LiteralPartition::from(alg, std::move(sets));
    }
  }
  return {};
}

bool within_next_literal(const ExprPool& pool, const SymbolSet& a, Ere r) {
  const Algebra& alg = pool.algebra();
  NextLiterals next(pool);
  const LiteralPartition& literals = next.of(r);
  if (alg.is_empty(alg.intersect(a, literals.coverage(alg)))) return true;
  return std::any_of(literals.begin(), literals.end(),
                     [&](const SymbolSet& member) { return alg.is_subset(a, member); });
}

}  // namespace ere
