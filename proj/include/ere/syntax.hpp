#ifndef ERE_SYNTAX_HPP_
#define ERE_SYNTAX_HPP_

// Extended regular expressions over an effective boolean algebra.
//
// Expressions live in an ExprPool, which hash-conses every node. The smart
// constructors keep the following normal form, so that structural identity
// (equal Ere handles) is the similarity relation:
//
//   r|s   associative, commutative, idempotent; ∅ is the identity; all
//         literal operands are merged into one; right-leaning spine
//   r&s   associative, commutative, idempotent; ∅ annihilates
//   r·s   ∅ annihilates, ε is the identity, right-leaning
//   r*    (r*)* = r*, ε* = ∅* = ε
//   !r    !!r = r
//
// ∅ is Literal(⊥) and Σ* is Star(Literal(⊤)).

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ere/alphabet.hpp"

namespace ere {

enum class Op : std::uint8_t { kEpsilon, kLiteral, kUnion, kConcat, kStar, kAnd, kNot };

// Handle to an interned, normalized expression. Two handles from the same
// pool are equal iff the expressions are similar.
class Ere {
 public:
  Ere() = default;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Ere, Ere) = default;
  friend auto operator<=>(Ere, Ere) = default;

 private:
  friend class ExprPool;
  explicit Ere(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

struct EreHash {
  std::size_t operator()(Ere e) const { return std::hash<std::uint32_t>{}(e.id()); }
};

// Unnormalized syntax tree, as written. Produced by the parser and by test
// generators; ExprPool::build() turns it into a normalized Ere.
struct RawExpr {
  Op op = Op::kEpsilon;
  SymbolSet set;  // kLiteral only
  std::vector<RawExpr> children;

  static RawExpr epsilon() { return {}; }
  static RawExpr literal(SymbolSet s) { return {Op::kLiteral, std::move(s), {}}; }
  static RawExpr unary(Op op, RawExpr r) { return {op, {}, {std::move(r)}}; }
  static RawExpr binary(Op op, RawExpr r, RawExpr s) {
    return {op, {}, {std::move(r), std::move(s)}};
  }
};

// Expression size (constructors plus literals) and literal width.
struct Metrics {
  std::uint64_t size = 0;
  std::uint64_t width = 0;
};

Metrics raw_metrics(const RawExpr& r);

class ExprPool {
 public:
  explicit ExprPool(const Algebra& algebra);
  ExprPool(const ExprPool&) = delete;
  ExprPool& operator=(const ExprPool&) = delete;

  const Algebra& algebra() const { return *algebra_; }

  Ere epsilon() const { return epsilon_; }
  Ere empty() const { return empty_; }
  Ere sigma_star() const { return sigma_star_; }

  Ere literal(const SymbolSet& a);
  Ere union_of(Ere r, Ere s);
  Ere concat(Ere r, Ere s);
  Ere star(Ere r);
  Ere intersection(Ere r, Ere s);
  Ere negation(Ere r);

  Ere build(const RawExpr& raw);
  RawExpr to_raw(Ere r) const;

  Op op(Ere r) const { return node(r).op; }
  // Literal payload; only meaningful for Op::kLiteral.
  const SymbolSet& set(Ere r) const { return node(r).set; }
  // Binary nodes: left and right operand. Unary nodes: lhs only.
  Ere lhs(Ere r) const { return Ere(node(r).lhs); }
  Ere rhs(Ere r) const { return Ere(node(r).rhs); }

  bool nullable(Ere r) const { return node(r).nullable; }
  std::uint64_t size(Ere r) const { return node(r).size; }
  std::uint64_t width(Ere r) const { return node(r).width; }

  bool is_empty_literal(Ere r) const { return r == empty_; }

  // Printed in the concrete syntax accepted by parse().
  std::string to_string(Ere r) const;

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Op op;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    SymbolSet set;
    bool nullable = false;
    std::uint64_t size = 0;
    std::uint64_t width = 0;
  };
  struct Key {
    Op op;
    std::uint32_t lhs;
    std::uint32_t rhs;
    SymbolSet set;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  const Node& node(Ere r) const { return nodes_.at(r.id()); }
  Ere intern(Op op, std::uint32_t lhs, std::uint32_t rhs, const SymbolSet& set);
  // Operands of a Union (or And) spine rooted at r.
  void flatten(Op op, Ere r, std::vector<Ere>& out) const;
  Ere spine(Op op, std::vector<Ere> operands);
  void print(Ere r, int context, std::string& out) const;

  const Algebra* algebra_;
  std::vector<Node> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
  Ere epsilon_;
  Ere empty_;
  Ere sigma_star_;
};

}  // namespace ere

#endif  // ERE_SYNTAX_HPP_
