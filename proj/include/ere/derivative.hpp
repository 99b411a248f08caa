#ifndef ERE_DERIVATIVE_HPP_
#define ERE_DERIVATIVE_HPP_

#include <string_view>
#include <unordered_map>

#include "ere/syntax.hpp"

namespace ere {

// Brzozowski derivatives by symbols, and the positive / negative
// derivatives by symbol sets. Results are normalized expressions in the
// same pool. Symbol derivatives are memoized per (symbol, expression).
class Derivatives {
 public:
  explicit Derivatives(ExprPool& pool) : pool_(pool) {}

  ExprPool& pool() const { return pool_; }

  // Expression for the left quotient a⁻¹⟦r⟧.
  Ere by_symbol(Symbol a, Ere r);

  // Over-approximates ⋃_{a∈A} ⟦∂_a r⟧; exact when A lies within a next
  // literal of r. Δ_∅(r) = ∅.
  Ere positive(const SymbolSet& a, Ere r);

  // Under-approximates ⋂_{a∈A} ⟦∂_a r⟧; exact when A lies within a next
  // literal of r. ∇_∅(r) = Σ*.
  Ere negative(const SymbolSet& a, Ere r);

  // The derivative by a non-empty literal A that lies inside a member of
  // next(r) (or outside all of them): ∂_a r for the least a ∈ A. The
  // containment is verified in builds without NDEBUG.
  Ere by_literal(const SymbolSet& a, Ere r);

  // Left fold of by_symbol over `word`.
  Ere by_word(std::u32string_view word, Ere r);

 private:
  Ere set_derivative(const SymbolSet& a, Ere r, bool positive);

  struct MemoKey {
    Symbol symbol;
    std::uint32_t expr;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
  };
  struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
      return (static_cast<std::size_t>(k.symbol) << 32) ^ k.expr;
    }
  };

  ExprPool& pool_;
  std::unordered_map<MemoKey, Ere, MemoHash> memo_;
};

}  // namespace ere

#endif  // ERE_DERIVATIVE_HPP_
