#ifndef ERE_TESTS_SUPPORT_RANDOM_ERE_HPP_
#define ERE_TESTS_SUPPORT_RANDOM_ERE_HPP_

// Random generators shared by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "ere/alphabet.hpp"
#include "ere/next.hpp"
#include "ere/syntax.hpp"

namespace ere::testing {

using Rng = std::mt19937_64;

struct OpWeights {
  int unions = 3;
  int concats = 3;
  int ands = 2;
  int stars = 2;
  int nots = 2;
  // Leaf choices.
  int epsilons = 1;
  int literals = 6;
  int empties = 1;
};

// A tree with at most `max_size` constructors and literals.
RawExpr random_raw(Rng& rng, const BitsetAlgebra& algebra, int max_size,
                   const OpWeights& weights = {});

// Non-empty random subset of the universe.
SymbolSet random_nonempty_set(Rng& rng, const BitsetAlgebra& algebra);

// Pairwise disjoint non-empty sets; the covered part is random too.
LiteralPartition random_partition(Rng& rng, const BitsetAlgebra& algebra);

bool mentions(const RawExpr& r, Op op);

// All words of length <= n over the universe.
std::vector<std::u32string> words_up_to(const BitsetAlgebra& algebra, std::size_t n);

}  // namespace ere::testing

#endif  // ERE_TESTS_SUPPORT_RANDOM_ERE_HPP_
