#include "ere/derivative.hpp"

#include <stdexcept>

#include "ere/next.hpp"

namespace ere {

Ere Derivatives::by_symbol(Symbol a, Ere r) {
  const MemoKey key{a, r.id()};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  ExprPool& p = pool_;
  Ere out;
  switch (p.op(r)) {
    case Op::kEpsilon:
      out = p.empty();
      break;
    case Op::kLiteral:
      out = p.algebra().contains(p.set(r), a) ? p.epsilon() : p.empty();
      break;
    case Op::kUnion:
      out = p.union_of(by_symbol(a, p.lhs(r)), by_symbol(a, p.rhs(r)));
      break;
    case Op::kConcat: {
      const Ere head = p.concat(by_symbol(a, p.lhs(r)), p.rhs(r));
      out = p.nullable(p.lhs(r)) ? p.union_of(head, by_symbol(a, p.rhs(r))) : head;
      break;
    }
    case Op::kStar:
      out = p.concat(by_symbol(a, p.lhs(r)), r);
      break;
    case Op::kAnd:
      out = p.intersection(by_symbol(a, p.lhs(r)), by_symbol(a, p.rhs(r)));
      break;
    case Op::kNot:
      out = p.negation(by_symbol(a, p.lhs(r)));
      break;
  }
  memo_.emplace(key, out);
  return out;
}

Ere Derivatives::positive(const SymbolSet& a, Ere r) {
  if (pool_.algebra().is_empty(a)) return pool_.empty();
  return set_derivative(a, r, true);
}

Ere Derivatives::negative(const SymbolSet& a, Ere r) {
  if (pool_.algebra().is_empty(a)) return pool_.sigma_star();
  return set_derivative(a, r, false);
}

// `a` is non-empty; positive and negative differ only on literals and flip
// under negation.
Ere Derivatives::set_derivative(const SymbolSet& a, Ere r, bool positive) {
  ExprPool& p = pool_;
  const Algebra& alg = p.algebra();
  switch (p.op(r)) {
    case Op::kEpsilon:
      return p.empty();
    case Op::kLiteral: {
      const bool hit = positive ? !alg.is_empty(alg.intersect(a, p.set(r)))
                                : alg.is_subset(a, p.set(r));
      return hit ? p.epsilon() : p.empty();
    }
    case Op::kUnion:
      return p.union_of(set_derivative(a, p.lhs(r), positive),
                        set_derivative(a, p.rhs(r), positive));
    case Op::kConcat: {
      const Ere head = p.concat(set_derivative(a, p.lhs(r), positive), p.rhs(r));
      if (!p.nullable(p.lhs(r))) return head;
      return p.union_of(head, set_derivative(a, p.rhs(r), positive));
    }
    case Op::kStar:
      return p.concat(set_derivative(a, p.lhs(r), positive), r);
    case Op::kAnd:
      return p.intersection(set_derivative(a, p.lhs(r), positive),
                            set_derivative(a, p.rhs(r), positive));
    case Op::kNot:
      return p.negation(set_derivative(a, p.lhs(r), !positive));
  }
  throw std::logic_error("unknown expression operator");
}

Ere Derivatives::by_literal(const SymbolSet& a, Ere r) {
  const Algebra& alg = pool_.algebra();
  if (alg.is_empty(a)) throw std::invalid_argument("derivative by the empty literal");
#ifndef NDEBUG
  if (!within_next_literal(pool_, a, r)) {
    throw std::invalid_argument("literal " + alg.format(a) + " straddles the next literals of " +
                                pool_.to_string(r));
  }
#endif
  return by_symbol(alg.pick_witness(a), r);
}

Ere Derivatives::by_word(std::u32string_view word, Ere r) {
  for (Symbol a : word) r = by_symbol(a, r);
  return r;
}

}  // namespace ere
