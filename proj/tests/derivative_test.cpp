#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>

#include "ere/derivative.hpp"
#include "ere/next.hpp"
#include "ere/oracle.hpp"
#include "ere/parser.hpp"
#include "support/random_ere.hpp"

namespace ere {
namespace {

constexpr std::size_t kBound = 6;

class DerivativeTest : public ::testing::Test {
 protected:
  DerivativeTest() : alg_(U"abc"), pool_(alg_), d_(pool_) {}

  Ere p(std::string_view text) { return parse(text, pool_); }
  SymbolSet set(std::u32string_view members) {
    SymbolSet s = alg_.bottom();
    for (Symbol x : members) s = alg_.unite(s, alg_.singleton(x));
    return s;
  }
  bool same_language(Ere r, Ere s) { return slice_equal(pool_, r, s, kBound); }

  BitsetAlgebra alg_;
  ExprPool pool_;
  Derivatives d_;
};

TEST_F(DerivativeTest, SymbolDerivatives) {
  EXPECT_EQ(d_.by_symbol('a', p("ac")), p("c"));
  EXPECT_EQ(d_.by_symbol('a', p("(ac)&(bc)")), pool_.empty());
  EXPECT_EQ(d_.by_symbol('b', p("(ac)|(bc)")), p("c"));
  EXPECT_EQ(d_.by_symbol('a', pool_.epsilon()), pool_.empty());
  EXPECT_EQ(d_.by_symbol('a', p("a*b")), p("a*b"));
  EXPECT_EQ(d_.by_symbol('b', p("a*b")), pool_.epsilon());
  EXPECT_EQ(d_.by_symbol('a', p("!a")), p("!()"));
}

TEST_F(DerivativeTest, PositiveDerivativeOfIntersection) {
  const Ere r = p("(ac)&(bc)");
  const Ere delta = d_.positive(set(U"ab"), r);
  EXPECT_TRUE(same_language(delta, p("c")));
  EXPECT_EQ(delta, p("c"));
  EXPECT_EQ(d_.positive(alg_.bottom(), r), pool_.empty());
}

TEST_F(DerivativeTest, NegativeDerivativeOfUnion) {
  const Ere r = p("(ac)|(bc)");
  const Ere nabla = d_.negative(set(U"ab"), r);
  EXPECT_TRUE(same_language(nabla, pool_.empty()));
  EXPECT_EQ(d_.negative(alg_.bottom(), r), pool_.sigma_star());
  EXPECT_EQ(d_.negative(set(U"a"), p("a|b")), pool_.epsilon());
}

TEST_F(DerivativeTest, LiteralDerivatives) {
  EXPECT_EQ(d_.by_literal(set(U"ab"), p("(a|b)*")), p("(a|b)*"));
  EXPECT_EQ(d_.by_literal(set(U"c"), p("(a|b)|c")), pool_.epsilon());
  EXPECT_EQ(d_.by_literal(set(U"a"), p("a|b")), pool_.epsilon());
}

TEST_F(DerivativeTest, WordDerivatives) {
  const Ere r = p("(a|b)c*");
  EXPECT_EQ(d_.by_word(U"", r), r);
  EXPECT_TRUE(pool_.nullable(d_.by_word(U"ab", p("ab"))));
  EXPECT_FALSE(pool_.nullable(d_.by_word(U"c", p("a|b"))));
}

TEST_F(DerivativeTest, NextLiteralStraddlesConjuncts) {
  BitsetAlgebra alg(U"ab");
  ExprPool pool(alg);
  Derivatives d(pool);
  NextLiterals next(pool);

  const Ere r = parse("!(a&b)", pool);
  ASSERT_EQ(next.of(r).literals(), std::vector<SymbolSet>{alg.top()});
  EXPECT_TRUE(slice_equal(pool, d.by_symbol('a', r), pool.sigma_star(), kBound));
  EXPECT_TRUE(slice_equal(pool, d.positive(alg.top(), r), pool.sigma_star(), kBound));
  EXPECT_EQ(d.negative(alg.top(), r), parse("!()", pool));

  const Ere s = parse("(a&b)|[ab]b", pool);
  ASSERT_EQ(next.of(s).literals(), std::vector<SymbolSet>{alg.top()});
  EXPECT_EQ(d.by_symbol('a', s), parse("b", pool));
  EXPECT_EQ(d.positive(alg.top(), s), parse("()|b", pool));
  EXPECT_EQ(d.negative(alg.top(), s), parse("b", pool));
}

#ifndef NDEBUG
TEST_F(DerivativeTest, LiteralThatSplitsANextLiteralIsRejected) {
  EXPECT_THROW(d_.by_literal(set(U"ab"), p("ac|bb")), std::logic_error);
}
#endif

// Bounded forms of the derivative lemmas on random expressions.

class DerivativeProperties : public ::testing::Test {
 protected:
  DerivativeProperties() : alg_(U"abc"), pool_(alg_), d_(pool_), next_(pool_), rng_(99) {}

  Ere random_expr() { return pool_.build(testing::random_raw(rng_, alg_, 8)); }
  Ere random_and_free_expr() {
    testing::OpWeights weights;
    weights.ands = 0;
    return pool_.build(testing::random_raw(rng_, alg_, 8, weights));
  }
  LanguageSlice sl(Ere r) { return slice(pool_, r, kBound); }

  static bool includes(const LanguageSlice& big, const LanguageSlice& small) {
    return std::includes(big.words.begin(), big.words.end(), small.words.begin(),
                         small.words.end());
  }

  BitsetAlgebra alg_;
  ExprPool pool_;
  Derivatives d_;
  NextLiterals next_;
  testing::Rng rng_;
};

TEST_F(DerivativeProperties, SingletonSetsAgreeWithSymbolDerivative) {
  for (int i = 0; i < 1000; ++i) {
    const Ere r = random_expr();
    for (Symbol a : alg_.universe()) {
      const SymbolSet single = alg_.singleton(a);
      ASSERT_EQ(d_.positive(single, r), d_.by_symbol(a, r)) << pool_.to_string(r);
      ASSERT_TRUE(slice_equal(pool_, d_.negative(single, r), d_.by_symbol(a, r), kBound))
          << pool_.to_string(r);
    }
  }
}

TEST_F(DerivativeProperties, PositiveAndNegativeBracketTheSymbolDerivatives) {
  for (int i = 0; i < 300; ++i) {
    const Ere r = random_expr();
    const SymbolSet a = testing::random_nonempty_set(rng_, alg_);
    const LanguageSlice nabla = sl(d_.negative(a, r));
    const LanguageSlice delta = sl(d_.positive(a, r));
    for (Symbol x : alg_.members(a)) {
      const LanguageSlice dx = sl(d_.by_symbol(x, r));
      ASSERT_TRUE(includes(dx, nabla)) << pool_.to_string(r);
      ASSERT_TRUE(includes(delta, dx)) << pool_.to_string(r);
    }
  }
}

// Δ and ∇ agree with ∂ on next literals only when no intersection sits
// under the literal: the meet drops cells, so a literal may straddle the
// cells of both conjuncts. See NextLiteralStraddlesConjuncts.
TEST_F(DerivativeProperties, ExactOnNextLiterals) {
  for (int i = 0; i < 300; ++i) {
    const Ere r = random_and_free_expr();
    for (const SymbolSet& a : next_.of(r)) {
      const LanguageSlice delta = sl(d_.positive(a, r));
      ASSERT_EQ(delta, sl(d_.negative(a, r))) << pool_.to_string(r);
      for (Symbol x : alg_.members(a)) {
        ASSERT_EQ(delta, sl(d_.by_symbol(x, r))) << pool_.to_string(r);
      }
      ASSERT_EQ(delta, sl(d_.by_literal(a, r)));
    }
  }
}

TEST_F(DerivativeProperties, Coverage) {
  for (int i = 0; i < 300; ++i) {
    const Ere r = random_and_free_expr();
    const LiteralPartition& next = next_.of(r);
    for (Symbol x : alg_.universe()) {
      const LanguageSlice dx = sl(d_.by_symbol(x, r));
      std::set<std::u32string> covered;
      for (const SymbolSet& a : next) {
        if (!alg_.contains(a, x)) continue;
        const LanguageSlice delta = sl(d_.positive(a, r));
        const LanguageSlice nabla = sl(d_.negative(a, r));
        std::set_intersection(delta.words.begin(), delta.words.end(), nabla.words.begin(),
                              nabla.words.end(), std::inserter(covered, covered.end()));
      }
      ASSERT_EQ(dx.words, covered) << pool_.to_string(r);
    }
  }
}

TEST_F(DerivativeProperties, SubLiteralsGiveTheSameDerivative) {
  for (int i = 0; i < 300; ++i) {
    const Ere r = random_and_free_expr();
    for (const SymbolSet& a : next_.of(r)) {
      const std::uint64_t mask = alg_.mask(a);
      // A random non-empty sub-mask.
      std::uint64_t sub = 0;
      while (sub == 0) sub = mask & std::uniform_int_distribution<std::uint64_t>(0, 7)(rng_);
      const SymbolSet part = alg_.from_mask(sub);
      ASSERT_EQ(sl(d_.positive(part, r)), sl(d_.positive(a, r))) << pool_.to_string(r);
      ASSERT_EQ(sl(d_.negative(part, r)), sl(d_.negative(a, r))) << pool_.to_string(r);
    }
  }
}

TEST_F(DerivativeProperties, WordInclusion) {
  const std::vector<std::u32string> words = testing::words_up_to(alg_, kBound);
  for (int i = 0; i < 100; ++i) {
    const Ere r = random_expr();
    const LanguageSlice s = sl(r);
    for (const std::u32string& w : words) {
      ASSERT_EQ(s.contains(w), pool_.nullable(d_.by_word(w, r))) << pool_.to_string(r);
    }
  }
}

}  // namespace
}  // namespace ere
