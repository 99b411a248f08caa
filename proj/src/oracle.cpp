#include "ere/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace ere {

namespace {

constexpr std::size_t kMaxOracleWords = std::size_t{1} << 22;

const BitsetAlgebra& oracle_algebra(const Algebra& algebra, std::size_t bound) {
  const auto* bits = dynamic_cast<const BitsetAlgebra*>(&algebra);
  if (bits == nullptr) throw OracleLimitError("the slice oracle needs a bitset alphabet");
  const std::size_t k = bits->universe().size();
  if (k > kMaxOracleAlphabet) throw OracleLimitError("the slice oracle supports at most 8 symbols");
  if (bound > kMaxOracleBound) throw OracleLimitError("the slice oracle supports N <= 10");
  std::size_t total = 1;
  std::size_t layer = 1;
  for (std::size_t n = 0; n < bound; ++n) {
    layer *= k;
    total += layer;
    if (total > kMaxOracleWords) {
      throw OracleLimitError("Σ^{<=N} too large for the slice oracle");
    }
  }
  return *bits;
}

// Words of length <= N are numbered by length, then lexicographically by
// symbol rank: index(w) = offset[|w|] + value(w) with value in base |Σ|.
class WordIndex {
 public:
  WordIndex(const BitsetAlgebra& algebra, std::size_t bound)
      : sigma_(algebra.universe()), bound_(bound) {
    const std::size_t k = sigma_.size();
    std::size_t power = 1;
    for (std::size_t n = 0; n <= bound; ++n) {
      offset_.push_back(total_);
      power_.push_back(power);
      total_ += power;
      power *= k;
    }
    offset_.push_back(total_);
  }

  std::size_t total() const { return total_; }
  std::size_t bound() const { return bound_; }
  std::size_t offset(std::size_t len) const { return offset_[len]; }
  std::size_t power(std::size_t len) const { return power_[len]; }
  std::size_t length_of(std::size_t index) const {
    std::size_t len = 0;
    while (offset_[len + 1] <= index) ++len;
    return len;
  }

  std::u32string decode(std::size_t index) const {
    const std::size_t len = length_of(index);
    std::size_t value = index - offset_[len];
    std::u32string w(len, U'\0');
    for (std::size_t i = len; i-- > 0;) {
      w[i] = sigma_[value % sigma_.size()];
      value /= sigma_.size();
    }
    return w;
  }

 private:
  std::u32string sigma_;
  std::size_t bound_;
  std::size_t total_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> power_;
};

using Words = std::vector<bool>;

class SliceBuilder {
 public:
  SliceBuilder(const BitsetAlgebra& algebra, std::size_t bound)
      : algebra_(algebra), index_(algebra, bound) {}

  const WordIndex& index() const { return index_; }

  Words none() const { return Words(index_.total(), false); }

  Words everything() const { return Words(index_.total(), true); }

  Words epsilon() const {
    Words out = none();
    out[0] = true;
    return out;
  }

  Words literal(const SymbolSet& a) const {
    Words out = none();
    if (index_.bound() == 0) return out;
    const std::u32string& sigma = algebra_.universe();
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      if (algebra_.contains(a, sigma[j])) out[index_.offset(1) + j] = true;
    }
    return out;
  }

  Words unite(const Words& x, const Words& y) const {
    Words out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] || y[i];
    return out;
  }

  Words intersect(const Words& x, const Words& y) const {
    Words out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] && y[i];
    return out;
  }

  // Membership of a word of length <= N does not depend on longer words,
  // so complementing within Σ^{≤N} is exact.
  Words complement(const Words& x) const {
    Words out = x;
    out.flip();
    return out;
  }

  Words concat(const Words& x, const Words& y) const {
    Words out = none();
    const std::size_t n = index_.bound();
    for (std::size_t lu = 0; lu <= n; ++lu) {
      for (std::size_t u = index_.offset(lu); u < index_.offset(lu + 1); ++u) {
        if (!x[u]) continue;
        const std::size_t uval = u - index_.offset(lu);
        for (std::size_t lv = 0; lu + lv <= n; ++lv) {
          const std::size_t base = index_.offset(lu + lv) + uval * index_.power(lv);
          for (std::size_t v = index_.offset(lv); v < index_.offset(lv + 1); ++v) {
            if (y[v]) out[base + (v - index_.offset(lv))] = true;
          }
        }
      }
    }
    return out;
  }

  Words star(const Words& x) const {
    Words acc = epsilon();
    while (true) {
      Words grown = unite(acc, concat(acc, x));
      if (grown == acc) return acc;
      acc = std::move(grown);
    }
  }

  LanguageSlice finish(const Words& w) const {
    LanguageSlice out{index_.bound(), {}};
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i]) out.words.insert(index_.decode(i));
    }
    return out;
  }

 private:
  const BitsetAlgebra& algebra_;
  WordIndex index_;
};

Words eval_raw(const SliceBuilder& b, const RawExpr& r) {
  switch (r.op) {
    case Op::kEpsilon:
      return b.epsilon();
    case Op::kLiteral:
      return b.literal(r.set);
    case Op::kUnion:
      return b.unite(eval_raw(b, r.children.at(0)), eval_raw(b, r.children.at(1)));
    case Op::kConcat:
      return b.concat(eval_raw(b, r.children.at(0)), eval_raw(b, r.children.at(1)));
    case Op::kAnd:
      return b.intersect(eval_raw(b, r.children.at(0)), eval_raw(b, r.children.at(1)));
    case Op::kStar:
      return b.star(eval_raw(b, r.children.at(0)));
    case Op::kNot:
      return b.complement(eval_raw(b, r.children.at(0)));
  }
  return b.none();
}

class PoolEvaluator {
 public:
  PoolEvaluator(const SliceBuilder& b, const ExprPool& pool) : b_(b), pool_(pool) {}

  const Words& eval(Ere r) {
    if (auto it = memo_.find(r.id()); it != memo_.end()) return it->second;
    Words out;
    switch (pool_.op(r)) {
      case Op::kEpsilon:
        out = b_.epsilon();
        break;
      case Op::kLiteral:
        out = b_.literal(pool_.set(r));
        break;
      case Op::kUnion:
        out = b_.unite(eval(pool_.lhs(r)), eval(pool_.rhs(r)));
        break;
      case Op::kConcat:
        out = b_.concat(eval(pool_.lhs(r)), eval(pool_.rhs(r)));
        break;
      case Op::kAnd:
        out = b_.intersect(eval(pool_.lhs(r)), eval(pool_.rhs(r)));
        break;
      case Op::kStar:
        out = b_.star(eval(pool_.lhs(r)));
        break;
      case Op::kNot:
        out = b_.complement(eval(pool_.lhs(r)));
        break;
    }
    return memo_.emplace(r.id(), std::move(out)).first->second;
  }

 private:
  const SliceBuilder& b_;
  const ExprPool& pool_;
  // Node-based map: references stay valid across rehashing.
  std::unordered_map<std::uint32_t, Words> memo_;
};

}  // namespace

LanguageSlice slice(const ExprPool& pool, Ere r, std::size_t bound) {
  const SliceBuilder builder(oracle_algebra(pool.algebra(), bound), bound);
  PoolEvaluator evaluator(builder, pool);
  return builder.finish(evaluator.eval(r));
}

LanguageSlice slice(const RawExpr& r, const Algebra& algebra, std::size_t bound) {
  const SliceBuilder builder(oracle_algebra(algebra, bound), bound);
  return builder.finish(eval_raw(builder, r));
}

bool slice_subset(const ExprPool& pool, Ere r, Ere s, std::size_t bound) {
  const LanguageSlice x = slice(pool, r, bound);
  const LanguageSlice y = slice(pool, s, bound);
  return std::includes(y.words.begin(), y.words.end(), x.words.begin(), x.words.end());
}

bool slice_equal(const ExprPool& pool, Ere r, Ere s, std::size_t bound) {
  return slice(pool, r, bound) == slice(pool, s, bound);
}

LanguageSlice all_words(const Algebra& algebra, std::size_t bound) {
  const SliceBuilder builder(oracle_algebra(algebra, bound), bound);
  return builder.finish(builder.everything());
}

}  // namespace ere
