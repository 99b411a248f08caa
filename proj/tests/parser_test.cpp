#include <gtest/gtest.h>

#include "ere/alphabet.hpp"
#include "ere/parser.hpp"
#include "ere/syntax.hpp"

namespace ere {
namespace {

class ParserTest : public ::testing::Test {
 protected:
  ParserTest() : alg_(U"abc"), pool_(alg_) {}

  Ere lit(char c) { return pool_.literal(alg_.singleton(static_cast<Symbol>(c))); }
  Ere p(std::string_view text) { return parse(text, pool_); }

  BitsetAlgebra alg_;
  ExprPool pool_;
};

TEST_F(ParserTest, UnionOfSingletonsMerges) {
  EXPECT_EQ(p("(a|b)|c"), pool_.literal(alg_.top()));
}

TEST_F(ParserTest, IntersectionOfConcatenations) {
  const Ere r = p("(a.c)&(b.c)");
  ASSERT_EQ(pool_.op(r), Op::kAnd);
  const Ere dot = pool_.literal(alg_.top());
  const Ere ac = pool_.concat(lit('a'), pool_.concat(dot, lit('c')));
  const Ere bc = pool_.concat(lit('b'), pool_.concat(dot, lit('c')));
  EXPECT_EQ(r, pool_.intersection(ac, bc));
}

TEST_F(ParserTest, StarBindsTighterThanNegation) {
  const Ere r = p("!([a-c])*");
  ASSERT_EQ(pool_.op(r), Op::kNot);
  EXPECT_EQ(pool_.op(pool_.lhs(r)), Op::kStar);
  EXPECT_EQ(p("!a*"), pool_.negation(pool_.star(lit('a'))));
}

TEST_F(ParserTest, Precedence) {
  EXPECT_EQ(p("a|b&c"), pool_.union_of(lit('a'), pool_.intersection(lit('b'), lit('c'))));
  EXPECT_EQ(p("ab&c"), pool_.intersection(pool_.concat(lit('a'), lit('b')), lit('c')));
  EXPECT_EQ(p("!ab"), pool_.concat(pool_.negation(lit('a')), lit('b')));
  EXPECT_EQ(p("ab*"), pool_.concat(lit('a'), pool_.star(lit('b'))));
  EXPECT_EQ(p("a**"), pool_.star(lit('a')));
  EXPECT_EQ(p("!!a"), lit('a'));
}

TEST_F(ParserTest, SpecialAtoms) {
  EXPECT_EQ(p("()"), pool_.epsilon());
  EXPECT_EQ(p("[]"), pool_.empty());
  EXPECT_EQ(p("."), pool_.literal(alg_.top()));
  EXPECT_EQ(p(".*"), pool_.sigma_star());
  EXPECT_EQ(p("[^a]"), pool_.literal(alg_.complement(alg_.singleton('a'))));
  EXPECT_EQ(p("[a-b]"), p("a|b"));
  EXPECT_EQ(p("(())"), pool_.epsilon());
}

TEST_F(ParserTest, Escapes) {
  BitsetAlgebra alg(U"*|.aé");
  ExprPool pool(alg);
  EXPECT_EQ(parse("\\*", pool), pool.literal(alg.singleton('*')));
  EXPECT_EQ(parse("\\.", pool), pool.literal(alg.singleton('.')));
  EXPECT_EQ(parse("\\u{e9}", pool), pool.literal(alg.singleton(0xE9)));
  EXPECT_EQ(parse("é", pool), pool.literal(alg.singleton(0xE9)));
  EXPECT_EQ(parse("[\\|a]", pool), parse("\\||a", pool));
}

TEST_F(ParserTest, RejectsMalformedInput) {
  for (const char* bad : {"(a", "a)", "a|", "|a", "*", "a+", "[a", "&a", "!", "[b-a]", "\\u{zz}"}) {
    EXPECT_THROW(p(bad), ParseError) << bad;
  }
}

TEST_F(ParserTest, ErrorPositionPointsAtTheProblem) {
  try {
    p("ab+c");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2U);
  }
  try {
    p("(ab");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3U);
  }
}

TEST_F(ParserTest, SymbolOutsideAlphabetIsAnError) {
  EXPECT_THROW(p("az"), ParseError);
}

TEST_F(ParserTest, EmptyInputIsAnError) {
  EXPECT_THROW(p(""), ParseError);
}

TEST_F(ParserTest, RoundTripThroughPrinter) {
  for (const char* text : {"(a|b)*c", "!(a*)&(b|cc)", "a(b|())", "[]|.*", "(!a)*b", "[^b]c"}) {
    const Ere r = p(text);
    EXPECT_EQ(p(pool_.to_string(r)), r) << text << " printed as " << pool_.to_string(r);
  }
}

TEST(Words, ParseAndFormat) {
  EXPECT_EQ(parse_word("abc"), U"abc");
  EXPECT_EQ(parse_word(""), U"");
  EXPECT_EQ(parse_word("a\\u{1}"), std::u32string(U"a\u0001"));
  EXPECT_EQ(format_word(U""), "ε");
  EXPECT_EQ(format_word(U"ab"), "ab");
  EXPECT_EQ(format_word(std::u32string(U"a\u0001")), "a\\u{1}");
  EXPECT_EQ(parse_word(format_word(U"x\\y")), U"x\\y");
}

TEST(Unicode, Ranges) {
  IntervalAlgebra alg;
  ExprPool pool(alg);
  const Ere r = parse("[a-z0-9]", pool);
  ASSERT_EQ(pool.op(r), Op::kLiteral);
  EXPECT_EQ(alg.ranges(pool.set(r)).size(), 2U);
  EXPECT_EQ(parse("[^\\u{0}-\\u{10ffff}]", pool), pool.empty());
}

}  // namespace
}  // namespace ere
