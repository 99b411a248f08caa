#include <gtest/gtest.h>

#include "ere/alphabet.hpp"
#include "ere/oracle.hpp"
#include "ere/parser.hpp"
#include "ere/syntax.hpp"
#include "support/random_ere.hpp"

namespace ere {
namespace {

class SyntaxTest : public ::testing::Test {
 protected:
  SyntaxTest() : alg_(U"abc"), pool_(alg_) {}

  Ere lit(char c) { return pool_.literal(alg_.singleton(static_cast<Symbol>(c))); }
  Ere p(std::string_view text) { return parse(text, pool_); }

  BitsetAlgebra alg_;
  ExprPool pool_;
};

TEST_F(SyntaxTest, UnionMergesLiterals) {
  const Ere r = pool_.union_of(lit('a'), pool_.union_of(lit('b'), lit('a')));
  ASSERT_EQ(pool_.op(r), Op::kLiteral);
  EXPECT_EQ(alg_.members(pool_.set(r)), U"ab");
}

TEST_F(SyntaxTest, UnionIsAci) {
  const Ere x = p("ab");
  const Ere y = p("c*");
  const Ere z = p("!a");
  EXPECT_EQ(pool_.union_of(x, y), pool_.union_of(y, x));
  EXPECT_EQ(pool_.union_of(x, pool_.union_of(y, z)), pool_.union_of(pool_.union_of(x, y), z));
  EXPECT_EQ(pool_.union_of(x, x), x);
  EXPECT_EQ(pool_.union_of(x, pool_.empty()), x);
}

TEST_F(SyntaxTest, UnionSpineLeansRight) {
  const Ere r = pool_.union_of(pool_.union_of(p("ab"), p("c*")), pool_.union_of(p("!a"), p("ba")));
  for (Ere cur = r; pool_.op(cur) == Op::kUnion; cur = pool_.rhs(cur)) {
    EXPECT_NE(pool_.op(pool_.lhs(cur)), Op::kUnion);
    if (pool_.op(pool_.rhs(cur)) == Op::kUnion) {
      EXPECT_LT(pool_.lhs(cur), pool_.lhs(pool_.rhs(cur)));
    } else {
      EXPECT_LT(pool_.lhs(cur), pool_.rhs(cur));
    }
  }
}

TEST_F(SyntaxTest, EmptyAnnihilatesConcat) {
  const Ere r = p("a*b");
  EXPECT_EQ(pool_.concat(pool_.empty(), r), pool_.empty());
  EXPECT_EQ(pool_.concat(r, pool_.empty()), pool_.empty());
  EXPECT_EQ(pool_.concat(pool_.epsilon(), r), r);
  EXPECT_EQ(pool_.concat(r, pool_.epsilon()), r);
}

TEST_F(SyntaxTest, ConcatIsRightAssociative) {
  const Ere left = pool_.concat(pool_.concat(lit('a'), lit('b')), lit('c'));
  const Ere right = pool_.concat(lit('a'), pool_.concat(lit('b'), lit('c')));
  EXPECT_EQ(left, right);
  EXPECT_EQ(pool_.lhs(left), lit('a'));
}

TEST_F(SyntaxTest, StarAndNegationLaws) {
  const Ere r = p("ab");
  EXPECT_EQ(pool_.star(pool_.star(r)), pool_.star(r));
  EXPECT_EQ(pool_.star(pool_.epsilon()), pool_.epsilon());
  EXPECT_EQ(pool_.star(pool_.empty()), pool_.epsilon());
  EXPECT_EQ(pool_.negation(pool_.negation(r)), r);
}

TEST_F(SyntaxTest, IntersectionLaws) {
  const Ere x = p("a*");
  const Ere y = p("!b");
  EXPECT_EQ(pool_.intersection(x, y), pool_.intersection(y, x));
  EXPECT_EQ(pool_.intersection(x, x), x);
  EXPECT_EQ(pool_.intersection(x, pool_.empty()), pool_.empty());
}

TEST_F(SyntaxTest, CanonicalConstants) {
  EXPECT_EQ(pool_.op(pool_.empty()), Op::kLiteral);
  EXPECT_TRUE(alg_.is_empty(pool_.set(pool_.empty())));
  EXPECT_EQ(pool_.sigma_star(), pool_.star(pool_.literal(alg_.top())));
  EXPECT_EQ(pool_.literal(alg_.bottom()), pool_.empty());
}

TEST_F(SyntaxTest, Nullable) {
  EXPECT_TRUE(pool_.nullable(pool_.star(lit('a'))));
  EXPECT_TRUE(pool_.nullable(pool_.negation(lit('a'))));
  EXPECT_FALSE(pool_.nullable(pool_.intersection(pool_.epsilon(), lit('a'))));
  EXPECT_TRUE(pool_.nullable(pool_.epsilon()));
  EXPECT_FALSE(pool_.nullable(pool_.empty()));
}

TEST_F(SyntaxTest, SizeAndWidth) {
  EXPECT_EQ(pool_.size(pool_.epsilon()), 1U);
  const RawExpr raw = parse_raw("a|b*", alg_);
  EXPECT_EQ(raw_metrics(raw).size, 4U);
  EXPECT_EQ(raw_metrics(raw).width, 2U);
  EXPECT_EQ(pool_.size(pool_.build(raw)), 4U);
  const RawExpr both = parse_raw("a&b", alg_);
  EXPECT_EQ(raw_metrics(both).width, 2U);
  // a&b normalizes to its own tree since it is not a union.
  EXPECT_EQ(pool_.width(pool_.build(both)), 2U);
}

TEST_F(SyntaxTest, MergedLiteralCountsOnce) {
  EXPECT_EQ(raw_metrics(parse_raw("(a|b)|c", alg_)).size, 5U);
  EXPECT_EQ(pool_.size(p("(a|b)|c")), 1U);
}

TEST_F(SyntaxTest, InterningIsStructural) {
  const Ere r = p("(a|b)*&!(ab)");
  const Ere again = p("!(ab)&(b|a)*");
  EXPECT_EQ(r, again);
  const std::size_t before = pool_.node_count();
  (void)p("(a|b)*&!(ab)");
  EXPECT_EQ(pool_.node_count(), before);
}

TEST_F(SyntaxTest, PrintsParseableSyntax) {
  EXPECT_EQ(pool_.to_string(pool_.epsilon()), "()");
  EXPECT_EQ(pool_.to_string(pool_.empty()), "[]");
  EXPECT_EQ(pool_.to_string(p("(a|b)|c")), ".");
  EXPECT_EQ(pool_.to_string(p("!(a*)")), "!a*");
  EXPECT_EQ(pool_.to_string(p("(!a)*")), "(!a)*");
  EXPECT_EQ(pool_.to_string(p("a(b|cc)")), "a(b|cc)");
}

// Properties over random trees, checked against the slice oracle.

constexpr std::size_t kBound = 6;

class RandomSyntax : public ::testing::Test {
 protected:
  RandomSyntax() : alg_(U"ab"), pool_(alg_), rng_(2024) {}

  RawExpr next_raw() { return testing::random_raw(rng_, alg_, 10); }

  BitsetAlgebra alg_;
  ExprPool pool_;
  testing::Rng rng_;
};

TEST_F(RandomSyntax, NormalizationPreservesLanguage) {
  for (int i = 0; i < 500; ++i) {
    const RawExpr raw = next_raw();
    const Ere r = pool_.build(raw);
    ASSERT_EQ(slice(raw, alg_, kBound), slice(pool_, r, kBound)) << pool_.to_string(r);
  }
}

TEST_F(RandomSyntax, NormalizationIsIdempotent) {
  for (int i = 0; i < 500; ++i) {
    const Ere r = pool_.build(next_raw());
    ASSERT_EQ(pool_.build(pool_.to_raw(r)), r) << pool_.to_string(r);
    ASSERT_EQ(parse(pool_.to_string(r), pool_), r) << pool_.to_string(r);
  }
}

TEST_F(RandomSyntax, NullableMatchesSlice) {
  for (int i = 0; i < 500; ++i) {
    const Ere r = pool_.build(next_raw());
    ASSERT_EQ(pool_.nullable(r), slice(pool_, r, 0).contains(U"")) << pool_.to_string(r);
  }
}

TEST_F(RandomSyntax, EqualIdsMeanEqualTrees) {
  for (int i = 0; i < 300; ++i) {
    const Ere r = pool_.build(next_raw());
    const Ere s = pool_.build(next_raw());
    if (r == s) {
      ASSERT_EQ(pool_.to_string(r), pool_.to_string(s));
    } else {
      ASSERT_NE(pool_.to_string(r), pool_.to_string(s));
    }
  }
}

}  // namespace
}  // namespace ere
