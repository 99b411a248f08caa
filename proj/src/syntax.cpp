#include "ere/syntax.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ere {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

int precedence(Op op) {
  switch (op) {
    case Op::kUnion:
      return 0;
    case Op::kAnd:
      return 1;
    case Op::kConcat:
      return 2;
    case Op::kNot:
      return 3;
    case Op::kStar:
      return 4;
    case Op::kEpsilon:
    case Op::kLiteral:
      return 5;
  }
  return 5;
}

}  // namespace

Metrics raw_metrics(const RawExpr& r) {
  Metrics m{1, r.op == Op::kLiteral ? 1U : 0U};
  for (const RawExpr& c : r.children) {
    const Metrics cm = raw_metrics(c);
    m.size = sat_add(m.size, cm.size);
    m.width = sat_add(m.width, cm.width);
  }
  return m;
}

std::size_t ExprPool::KeyHash::operator()(const Key& k) const {
  std::size_t h = static_cast<std::size_t>(k.op);
  h = h * 1000003 ^ k.lhs;
  h = h * 1000003 ^ k.rhs;
  if (k.op == Op::kLiteral) h = h * 1000003 ^ k.set.hash();
  return h;
}

ExprPool::ExprPool(const Algebra& algebra) : algebra_(&algebra) {
  epsilon_ = intern(Op::kEpsilon, 0, 0, {});
  empty_ = intern(Op::kLiteral, 0, 0, algebra.bottom());
  sigma_star_ = star(literal(algebra.top()));
}

Ere ExprPool::intern(Op op, std::uint32_t lhs, std::uint32_t rhs, const SymbolSet& set) {
  Key key{op, lhs, rhs, set};
  if (auto it = index_.find(key); it != index_.end()) return Ere(it->second);

  Node n{op, lhs, rhs, set};
  switch (op) {
    case Op::kEpsilon:
      n.nullable = true;
      n.size = 1;
      break;
    case Op::kLiteral:
      n.nullable = false;
      n.size = 1;
      n.width = 1;
      break;
    case Op::kUnion:
    case Op::kConcat:
    case Op::kAnd: {
      const Node& a = nodes_[lhs];
      const Node& b = nodes_[rhs];
      n.nullable = op == Op::kUnion ? (a.nullable || b.nullable) : (a.nullable && b.nullable);
      n.size = sat_add(sat_add(a.size, b.size), 1);
      n.width = sat_add(a.width, b.width);
      break;
    }
    case Op::kStar:
      n.nullable = true;
      n.size = sat_add(nodes_[lhs].size, 1);
      n.width = nodes_[lhs].width;
      break;
    case Op::kNot:
      n.nullable = !nodes_[lhs].nullable;
      n.size = sat_add(nodes_[lhs].size, 1);
      n.width = nodes_[lhs].width;
      break;
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(n));
  index_.emplace(std::move(key), id);
  return Ere(id);
}

Ere ExprPool::literal(const SymbolSet& a) {
  if (a.owner() != algebra_->id()) {
    throw AlgebraError("literal from a different algebra than the pool's " + algebra_->name());
  }
  return intern(Op::kLiteral, 0, 0, a);
}

void ExprPool::flatten(Op op, Ere r, std::vector<Ere>& out) const {
  while (this->op(r) == op) {
    out.push_back(lhs(r));
    r = rhs(r);
  }
  out.push_back(r);
}

Ere ExprPool::spine(Op op, std::vector<Ere> operands) {
  std::sort(operands.begin(), operands.end());
  operands.erase(std::unique(operands.begin(), operands.end()), operands.end());
  Ere acc = operands.back();
  for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it) {
    acc = intern(op, it->id(), acc.id(), {});
  }
  return acc;
}

Ere ExprPool::union_of(Ere r, Ere s) {
  std::vector<Ere> operands;
  flatten(Op::kUnion, r, operands);
  flatten(Op::kUnion, s, operands);

  SymbolSet merged = algebra_->bottom();
  std::vector<Ere> rest;
  for (Ere e : operands) {
    if (op(e) == Op::kLiteral) {
      merged = algebra_->unite(merged, set(e));
    } else {
      rest.push_back(e);
    }
  }
  if (!algebra_->is_empty(merged)) rest.push_back(literal(merged));
  if (rest.empty()) return empty_;
  return spine(Op::kUnion, std::move(rest));
}

Ere ExprPool::intersection(Ere r, Ere s) {
  std::vector<Ere> operands;
  flatten(Op::kAnd, r, operands);
  flatten(Op::kAnd, s, operands);
  if (std::find(operands.begin(), operands.end(), empty_) != operands.end()) return empty_;
  return spine(Op::kAnd, std::move(operands));
}

Ere ExprPool::concat(Ere r, Ere s) {
  if (r == empty_ || s == empty_) return empty_;
  if (r == epsilon_) return s;
  if (s == epsilon_) return r;
  if (op(r) == Op::kConcat) return concat(lhs(r), concat(rhs(r), s));
  return intern(Op::kConcat, r.id(), s.id(), {});
}

Ere ExprPool::star(Ere r) {
  if (op(r) == Op::kStar) return r;
  if (r == epsilon_ || r == empty_) return epsilon_;
  return intern(Op::kStar, r.id(), 0, {});
}

Ere ExprPool::negation(Ere r) {
  if (op(r) == Op::kNot) return lhs(r);
  return intern(Op::kNot, r.id(), 0, {});
}

Ere ExprPool::build(const RawExpr& raw) {
  switch (raw.op) {
    case Op::kEpsilon:
      return epsilon_;
    case Op::kLiteral:
      return literal(raw.set);
    case Op::kUnion:
      return union_of(build(raw.children.at(0)), build(raw.children.at(1)));
    case Op::kConcat:
      return concat(build(raw.children.at(0)), build(raw.children.at(1)));
    case Op::kAnd:
      return intersection(build(raw.children.at(0)), build(raw.children.at(1)));
    case Op::kStar:
      return star(build(raw.children.at(0)));
    case Op::kNot:
      return negation(build(raw.children.at(0)));
  }
  throw std::logic_error("unknown expression operator");
}

RawExpr ExprPool::to_raw(Ere r) const {
  const Node& n = node(r);
  switch (n.op) {
    case Op::kEpsilon:
      return RawExpr::epsilon();
    case Op::kLiteral:
      return RawExpr::literal(n.set);
    case Op::kStar:
    case Op::kNot:
      return RawExpr::unary(n.op, to_raw(Ere(n.lhs)));
    default:
      return RawExpr::binary(n.op, to_raw(Ere(n.lhs)), to_raw(Ere(n.rhs)));
  }
}

std::string ExprPool::to_string(Ere r) const {
  std::string out;
  print(r, 0, out);
  return out;
}

void ExprPool::print(Ere r, int context, std::string& out) const {
  const Node& n = node(r);
  const bool parens = precedence(n.op) < context;
  if (parens) out.push_back('(');
  switch (n.op) {
    case Op::kEpsilon:
      out += "()";
      break;
    case Op::kLiteral:
      out += algebra_->format(n.set);
      break;
    case Op::kUnion:
      print(Ere(n.lhs), 1, out);
      out.push_back('|');
      print(Ere(n.rhs), 0, out);
      break;
    case Op::kAnd:
      print(Ere(n.lhs), 2, out);
      out.push_back('&');
      print(Ere(n.rhs), 1, out);
      break;
    case Op::kConcat:
      print(Ere(n.lhs), 3, out);
      print(Ere(n.rhs), 2, out);
      break;
    case Op::kNot:
      out.push_back('!');
      print(Ere(n.lhs), 3, out);
      break;
    case Op::kStar:
      print(Ere(n.lhs), 5, out);
      out.push_back('*');
      break;
  }
  if (parens) out.push_back(')');
}

}  // namespace ere
