#ifndef ERE_PARSER_HPP_
#define ERE_PARSER_HPP_

// Concrete syntax, loosest binding first:
//
//   expr  := alt
//   alt   := and ('|' and)*
//   and   := cat ('&' cat)*
//   cat   := neg+
//   neg   := '!' neg | post
//   post  := atom '*'*
//   atom  := '(' expr? ')' | class | char | '.'
//   class := '[' '^'? items ']'
//
// `()` is ε, `[]` is ∅, `.` is the whole alphabet. `+` is reserved and
// rejected. A backslash escapes the next character; `\u{hex}` names a
// codepoint.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ere/syntax.hpp"

namespace ere {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  // Codepoint offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

RawExpr parse_raw(std::string_view text, const Algebra& algebra);
Ere parse(std::string_view text, ExprPool& pool);

// A word given on the command line: UTF-8 with `\\` and `\u{hex}` escapes.
std::u32string parse_word(std::string_view text);
// Inverse of parse_word; the empty word is printed as `ε`.
std::string format_word(std::u32string_view word);

}  // namespace ere

#endif  // ERE_PARSER_HPP_
