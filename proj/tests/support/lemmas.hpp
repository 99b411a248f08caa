#ifndef ERE_TESTS_SUPPORT_LEMMAS_HPP_
#define ERE_TESTS_SUPPORT_LEMMAS_HPP_

// Executable forms of the partition and derivative lemmas. Each function
// returns an empty string when the property holds and a description of the
// first violation otherwise. Partition checks compare against plain
// std::set arithmetic; derivative checks compare bounded slices.

#include <cstddef>
#include <set>
#include <string>

#include "ere/alphabet.hpp"
#include "ere/next.hpp"
#include "ere/syntax.hpp"

namespace ere::testing {

using Elements = std::set<Symbol>;

Elements elements(const BitsetAlgebra& algebra, const SymbolSet& a);

// Join and left join recomputed over explicit element sets, ⊥ removed.
std::set<Elements> brute_join(const BitsetAlgebra& algebra, const LiteralPartition& l1,
                              const LiteralPartition& l2);
std::set<Elements> brute_left_join(const BitsetAlgebra& algebra, const LiteralPartition& l1,
                                   const LiteralPartition& l2);

// Coverage, disjointness and refinement, plus agreement with brute force.
std::string join_violation(const BitsetAlgebra& algebra, const LiteralPartition& l1,
                           const LiteralPartition& l2);
std::string left_join_violation(const BitsetAlgebra& algebra, const LiteralPartition& l1,
                                const LiteralPartition& l2);

// Symbols of one next literal share a derivative; symbols outside all of
// them have the empty derivative.
std::string partial_equivalence_violation(ExprPool& pool, Ere r, std::size_t bound);
// Every symbol with a non-empty derivative is covered by next(r).
std::string first_violation(ExprPool& pool, Ere r, std::size_t bound);
// Δ_A r = ∇_A r = ∂_a r for every next literal A and a ∈ A.
std::string left_quotient_violation(ExprPool& pool, Ere r, std::size_t bound);
// ∇_A r ⊆ ⋂ ∂_a r and Δ_A r ⊇ ⋃ ∂_a r for an arbitrary literal A.
std::string derivative_bounds_violation(ExprPool& pool, Ere r, const SymbolSet& a,
                                        std::size_t bound);

}  // namespace ere::testing

#endif  // ERE_TESTS_SUPPORT_LEMMAS_HPP_
