#ifndef ERE_ORACLE_HPP_
#define ERE_ORACLE_HPP_

// Bounded language semantics, computed directly from the set equations
// (no derivatives): slice(r, N) = ⟦r⟧ ∩ Σ^{≤N} over a small bitset
// alphabet. Used as ground truth in tests and by `--oracle-check`.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "ere/syntax.hpp"

namespace ere {

inline constexpr std::size_t kMaxOracleAlphabet = 8;
inline constexpr std::size_t kMaxOracleBound = 10;

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LanguageSlice {
  std::size_t bound = 0;
  std::set<std::u32string> words;

  bool contains(const std::u32string& w) const { return words.contains(w); }
  friend bool operator==(const LanguageSlice&, const LanguageSlice&) = default;
};

// Throws OracleLimitError unless the algebra is a BitsetAlgebra with at most
// kMaxOracleAlphabet symbols and bound <= kMaxOracleBound.
LanguageSlice slice(const ExprPool& pool, Ere r, std::size_t bound);
LanguageSlice slice(const RawExpr& r, const Algebra& algebra, std::size_t bound);

bool slice_subset(const ExprPool& pool, Ere r, Ere s, std::size_t bound);
bool slice_equal(const ExprPool& pool, Ere r, Ere s, std::size_t bound);

// Σ^{≤N}.
LanguageSlice all_words(const Algebra& algebra, std::size_t bound);

}  // namespace ere

#endif  // ERE_ORACLE_HPP_
