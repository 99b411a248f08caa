#include "ere/parser.hpp"

#include <cstdio>

namespace ere {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

std::string describe(Symbol c) {
  std::string out = "'";
  append_utf8(out, c);
  return out + "'";
}

class Parser {
 public:
  Parser(std::u32string text, const Algebra& algebra)
      : text_(std::move(text)), algebra_(algebra) {}

  RawExpr parse() {
    RawExpr r = alternation();
    if (!at_end()) fail("expected end of input, found " + describe(peek()));
    return r;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  Symbol peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  RawExpr alternation() {
    RawExpr r = conjunction();
    while (!at_end() && peek() == U'|') {
      ++pos_;
      r = RawExpr::binary(Op::kUnion, std::move(r), conjunction());
    }
    return r;
  }

  RawExpr conjunction() {
    RawExpr r = concatenation();
    while (!at_end() && peek() == U'&') {
      ++pos_;
      r = RawExpr::binary(Op::kAnd, std::move(r), concatenation());
    }
    return r;
  }

  bool starts_factor() const {
    if (at_end()) return false;
    const Symbol c = peek();
    return c != U'|' && c != U'&' && c != U')';
  }

  RawExpr concatenation() {
    if (!starts_factor()) {
      fail(at_end() ? "expected an expression, found end of input"
                    : "expected an expression, found " + describe(peek()));
    }
    std::vector<RawExpr> factors;
    while (starts_factor()) factors.push_back(negation());
    RawExpr r = std::move(factors.back());
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) {
      r = RawExpr::binary(Op::kConcat, std::move(*it), std::move(r));
    }
    return r;
  }

  RawExpr negation() {
    if (!at_end() && peek() == U'!') {
      ++pos_;
      if (!starts_factor()) fail("expected an operand after '!'");
      return RawExpr::unary(Op::kNot, negation());
    }
    return postfix();
  }

  RawExpr postfix() {
    RawExpr r = atom();
    while (!at_end() && peek() == U'*') {
      ++pos_;
      r = RawExpr::unary(Op::kStar, std::move(r));
    }
    return r;
  }

  RawExpr atom() {
    const Symbol c = peek();
    switch (c) {
      case U'(': {
        ++pos_;
        if (!at_end() && peek() == U')') {
          ++pos_;
          return RawExpr::epsilon();
        }
        RawExpr r = alternation();
        if (at_end() || peek() != U')') fail("expected ')'");
        ++pos_;
        return r;
      }
      case U'[':
        return RawExpr::literal(char_class());
      case U'.':
        ++pos_;
        return RawExpr::literal(algebra_.top());
      case U'*':
        fail("'*' must follow an operand");
      case U'+':
        fail("'+' is reserved; write union as '|'");
      case U']':
        fail("unbalanced ']'");
      default: {
        const std::size_t at = pos_;
        const Symbol x = character();
        return RawExpr::literal(member(x, at));
      }
    }
  }

  SymbolSet member(Symbol x, std::size_t at) const {
    try {
      return algebra_.singleton(x);
    } catch (const AlgebraError& e) {
      throw ParseError(at, e.what());
    }
  }

  // One possibly escaped character.
  Symbol character() {
    if (at_end()) fail("expected a character");
    Symbol c = text_[pos_++];
    if (c != U'\\') return c;
    if (at_end()) fail("dangling escape");
    c = text_[pos_++];
    if (c != U'u') return c;
    if (at_end() || peek() != U'{') fail("expected '{' after \\u");
    ++pos_;
    std::uint32_t value = 0;
    int digits = 0;
    while (!at_end() && peek() != U'}') {
      const Symbol d = text_[pos_++];
      int v = -1;
      if (d >= U'0' && d <= U'9') v = static_cast<int>(d - U'0');
      if (d >= U'a' && d <= U'f') v = static_cast<int>(d - U'a' + 10);
      if (d >= U'A' && d <= U'F') v = static_cast<int>(d - U'A' + 10);
      if (v < 0 || ++digits > 6) fail("invalid \\u{...} escape");
      value = value * 16 + static_cast<std::uint32_t>(v);
    }
    if (at_end() || digits == 0) fail("invalid \\u{...} escape");
    ++pos_;
    if (value > kMaxCodepoint) fail("codepoint out of range");
    return value;
  }

  SymbolSet char_class() {
    ++pos_;  // '['
    bool negated = false;
    if (!at_end() && peek() == U'^') {
      negated = true;
      ++pos_;
    }
    SymbolSet acc = algebra_.bottom();
    while (true) {
      if (at_end()) fail("unterminated character class");
      if (peek() == U']') {
        ++pos_;
        break;
      }
      const Symbol lo = character();
      Symbol hi = lo;
      if (pos_ + 1 < text_.size() && peek() == U'-' && text_[pos_ + 1] != U']') {
        ++pos_;
        const std::size_t at = pos_;
        hi = character();
        if (hi < lo) throw ParseError(at, "reversed range in character class");
      }
      acc = algebra_.unite(acc, algebra_.range(lo, hi));
    }
    return negated ? algebra_.complement(acc) : acc;
  }

  std::u32string text_;
  const Algebra& algebra_;
  std::size_t pos_ = 0;
};

}  // namespace

RawExpr parse_raw(std::string_view text, const Algebra& algebra) {
  std::u32string decoded;
  try {
    decoded = decode_utf8(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  if (decoded.empty()) throw ParseError(0, "empty expression; write ε as '()'");
  return Parser(std::move(decoded), algebra).parse();
}

Ere parse(std::string_view text, ExprPool& pool) {
  return pool.build(parse_raw(text, pool.algebra()));
}

std::u32string parse_word(std::string_view text) {
  const std::u32string in = decode_utf8(text);
  std::u32string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] != U'\\') {
      out.push_back(in[i]);
      continue;
    }
    if (++i >= in.size()) throw ParseError(i, "dangling escape");
    if (in[i] != U'u') {
      out.push_back(in[i]);
      continue;
    }
    const std::size_t open = i + 1;
    const std::size_t close = in.find(U'}', open);
    if (open >= in.size() || in[open] != U'{' || close == std::u32string::npos ||
        close == open + 1 || close - open > 7) {
      throw ParseError(i, "invalid \\u{...} escape");
    }
    std::uint32_t value = 0;
    for (std::size_t k = open + 1; k < close; ++k) {
      const Symbol d = in[k];
      int v = -1;
      if (d >= U'0' && d <= U'9') v = static_cast<int>(d - U'0');
      if (d >= U'a' && d <= U'f') v = static_cast<int>(d - U'a' + 10);
      if (d >= U'A' && d <= U'F') v = static_cast<int>(d - U'A' + 10);
      if (v < 0) throw ParseError(k, "invalid hex digit");
      value = value * 16 + static_cast<std::uint32_t>(v);
    }
    if (value > kMaxCodepoint) throw ParseError(i, "codepoint out of range");
    out.push_back(value);
    i = close;
  }
  return out;
}

std::string format_word(std::u32string_view word) {
  if (word.empty()) return "ε";
  std::string out;
  for (Symbol x : word) {
    if (x == U'\\') {
      out += "\\\\";
    } else if (x < 0x20 || x == 0x7F || x > 0x7E) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(x));
      out += buf;
    } else {
      out.push_back(static_cast<char>(x));
    }
  }
  return out;
}

}  // namespace ere
