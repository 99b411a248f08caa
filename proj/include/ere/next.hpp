#ifndef ERE_NEXT_HPP_
#define ERE_NEXT_HPP_

// Next literals: a finite family of pairwise disjoint, non-empty symbol
// sets such that all symbols of one member yield the same derivative, and
// every symbol that can start a word of the expression is covered.
//
// ⊥ members are dropped eagerly. Where the textbook definitions keep ∅ as a
// placeholder member (next(ε) = {∅}), join and left_join treat a missing
// side as if it held that placeholder, so join(L, {}) = L.

#include <memory>
#include <vector>

#include "ere/syntax.hpp"

namespace ere {

class LiteralPartition {
 public:
  LiteralPartition() = default;

  // Drops empty sets, merges duplicates and orders members by least
  // symbol. Members are expected to be pairwise disjoint.
  static LiteralPartition from(const Algebra& algebra, std::vector<SymbolSet> sets);

  const std::vector<SymbolSet>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  // Union of all members.
  SymbolSet coverage(const Algebra& algebra) const;

  friend bool operator==(const LiteralPartition&, const LiteralPartition&) = default;

 private:
  std::vector<SymbolSet> literals_;
};

// {A1⊓A2} ∪ {A1⊓¬⋃L2} ∪ {¬⋃L1⊓A2}: a common refinement covering both sides.
LiteralPartition join(const Algebra& algebra, const LiteralPartition& l1,
                      const LiteralPartition& l2);

// {A1⊓A2} ∪ {A1⊓¬⋃L2}: refines L1 against L2, covering exactly ⋃L1.
LiteralPartition left_join(const Algebra& algebra, const LiteralPartition& l1,
                           const LiteralPartition& l2);

// All pairwise intersections.
LiteralPartition meet(const Algebra& algebra, const LiteralPartition& l1,
                      const LiteralPartition& l2);

// Memoized next(r) over one pool.
class NextLiterals {
 public:
  explicit NextLiterals(const ExprPool& pool) : pool_(pool) {}

  const LiteralPartition& of(Ere r);
  // next(r ⊑ s) = next(r) ⋉ next(s).
  LiteralPartition of_inequality(Ere r, Ere s);

 private:
  LiteralPartition compute(Ere r);

  const ExprPool& pool_;
  std::vector<std::unique_ptr<LiteralPartition>> memo_;
};

// Whether the non-empty literal `a` lies inside one member of next(r) or
// is disjoint from all of them, i.e. whether all its symbols share one
// derivative by construction.
bool within_next_literal(const ExprPool& pool, const SymbolSet& a, Ere r);

}  // namespace ere

#endif  // ERE_NEXT_HPP_
