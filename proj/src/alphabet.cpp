#include "ere/alphabet.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>

namespace ere {

namespace {

std::atomic<std::uint32_t> next_algebra_id{1};

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

// Sorted-range normalization: merges overlapping and adjacent ranges.
std::vector<Interval> normalize_ranges(std::vector<Interval> in) {
  std::sort(in.begin(), in.end());
  std::vector<Interval> out;
  for (const Interval& r : in) {
    if (r.lo > r.hi) continue;
    if (!out.empty() &&
        static_cast<std::uint64_t>(r.lo) <= static_cast<std::uint64_t>(out.back().hi) + 1) {
      out.back().hi = std::max(out.back().hi, r.hi);
      continue;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::size_t SymbolSet::hash() const {
  std::size_t h = std::hash<std::uint32_t>{}(owner_);
  h = mix(h, rep_.index());
  std::visit(
      [&h](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Bits>) {
          h = mix(h, std::hash<std::uint64_t>{}(r.mask));
        } else if constexpr (std::is_same_v<T, Ranges>) {
          for (const Interval& i : r.ranges) h = mix(mix(h, i.lo), i.hi);
        } else {
          h = mix(h, r.cofinite ? 1 : 2);
          for (Symbol s : r.members) h = mix(h, s);
        }
      },
      rep_);
  return h;
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra() : id_(next_algebra_id.fetch_add(1)) {}

void Algebra::check_owner(const SymbolSet& a) const {
  if (a.owner() != id_) {
    throw AlgebraError("symbol set does not belong to algebra " + name());
  }
}

bool Algebra::is_equal(const SymbolSet& a, const SymbolSet& b) const {
  check_owner(a);
  check_owner(b);
  return a == b;
}

bool Algebra::is_subset(const SymbolSet& a, const SymbolSet& b) const {
  return is_empty(intersect(a, complement(b)));
}

void append_utf8(std::string& out, Symbol x) {
  if (x < 0x80) {
    out.push_back(static_cast<char>(x));
  } else if (x < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (x >> 6)));
    out.push_back(static_cast<char>(0x80 | (x & 0x3F)));
  } else if (x < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (x >> 12)));
    out.push_back(static_cast<char>(0x80 | ((x >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (x & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (x >> 18)));
    out.push_back(static_cast<char>(0x80 | ((x >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((x >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (x & 0x3F)));
  }
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto b = static_cast<unsigned char>(text[i]);
    int extra = 0;
    Symbol cp = 0;
    if (b < 0x80) {
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      cp = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      cp = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      cp = b & 0x07;
      extra = 3;
    } else {
      throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(i));
    }
    if (i + extra >= text.size()) {
      throw std::invalid_argument("truncated UTF-8 at byte " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      auto c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) {
        throw std::invalid_argument("invalid UTF-8 at byte " + std::to_string(i + k));
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append_escaped(std::string& out, Symbol x, bool in_class) {
  static constexpr std::string_view kSpecial = "()[]|&!*.\\+";
  static constexpr std::string_view kClassSpecial = "[]\\-^";
  if (x < 0x20 || x == 0x7F || x > 0x7E) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(x));
    out += buf;
    return;
  }
  const std::string_view special = in_class ? kClassSpecial : kSpecial;
  if (special.find(static_cast<char>(x)) != std::string_view::npos) out.push_back('\\');
  out.push_back(static_cast<char>(x));
}

std::string Algebra::format(const SymbolSet& a) const {
  check_owner(a);
  if (is_empty(a)) return "[]";
  if (is_top(a)) return ".";
  const bool negated = prefer_negated(a);
  const std::vector<Interval> ranges = to_ranges(negated ? complement(a) : a);
  if (!negated && ranges.size() == 1 && ranges[0].lo == ranges[0].hi) {
    std::string out;
    append_escaped(out, ranges[0].lo, false);
    return out;
  }
  std::string out = negated ? "[^" : "[";
  for (const Interval& r : ranges) {
    append_escaped(out, r.lo, true);
    if (r.hi == r.lo) continue;
    if (r.hi != r.lo + 1) out.push_back('-');
    append_escaped(out, r.hi, true);
  }
  out.push_back(']');
  return out;
}

// ---------------------------------------------------------------------------
// BitsetAlgebra

BitsetAlgebra::BitsetAlgebra(std::u32string_view symbols) : universe_(symbols) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  if (universe_.empty()) throw std::invalid_argument("bitset alphabet must not be empty");
  if (universe_.size() > 64) throw std::invalid_argument("bitset alphabet holds at most 64 symbols");
  full_ = universe_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_.size()) - 1;
}

std::string BitsetAlgebra::name() const {
  std::string out = "bitset:";
  for (Symbol s : universe_) append_utf8(out, s);
  return out;
}

int BitsetAlgebra::index_of(Symbol x) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), x);
  if (it == universe_.end() || *it != x) return -1;
  return static_cast<int>(it - universe_.begin());
}

std::uint64_t BitsetAlgebra::mask(const SymbolSet& a) const {
  check_owner(a);
  return std::get<SymbolSet::Bits>(a.rep()).mask;
}

SymbolSet BitsetAlgebra::from_mask(std::uint64_t m) const { return make(SymbolSet::Bits{m & full_}); }

SymbolSet BitsetAlgebra::bottom() const { return from_mask(0); }
SymbolSet BitsetAlgebra::top() const { return from_mask(full_); }

SymbolSet BitsetAlgebra::singleton(Symbol x) const {
  const int i = index_of(x);
  if (i < 0) {
    std::string msg = "symbol '";
    append_escaped(msg, x, false);
    throw AlgebraError(msg + "' is not in alphabet " + name());
  }
  return from_mask(std::uint64_t{1} << i);
}

SymbolSet BitsetAlgebra::range(Symbol lo, Symbol hi) const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (universe_[i] >= lo && universe_[i] <= hi) m |= std::uint64_t{1} << i;
  }
  return from_mask(m);
}

SymbolSet BitsetAlgebra::unite(const SymbolSet& a, const SymbolSet& b) const {
  return from_mask(mask(a) | mask(b));
}
SymbolSet BitsetAlgebra::intersect(const SymbolSet& a, const SymbolSet& b) const {
  return from_mask(mask(a) & mask(b));
}
SymbolSet BitsetAlgebra::complement(const SymbolSet& a) const { return from_mask(~mask(a)); }
bool BitsetAlgebra::is_empty(const SymbolSet& a) const { return mask(a) == 0; }

bool BitsetAlgebra::contains(const SymbolSet& a, Symbol x) const {
  const std::uint64_t m = mask(a);
  const int i = index_of(x);
  return i >= 0 && ((m >> i) & 1U) != 0;
}

bool BitsetAlgebra::in_universe(Symbol x) const { return index_of(x) >= 0; }

Symbol BitsetAlgebra::pick_witness(const SymbolSet& a) const {
  const std::uint64_t m = mask(a);
  if (m == 0) throw std::invalid_argument("pick_witness on the empty set");
  return universe_[std::countr_zero(m)];
}

std::u32string BitsetAlgebra::members(const SymbolSet& a) const {
  const std::uint64_t m = mask(a);
  std::u32string out;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if ((m >> i) & 1U) out.push_back(universe_[i]);
  }
  return out;
}

std::vector<Interval> BitsetAlgebra::to_ranges(const SymbolSet& a) const {
  std::vector<Interval> out;
  for (Symbol s : members(a)) {
    if (!out.empty() && out.back().hi + 1 == s) {
      out.back().hi = s;
    } else {
      out.push_back({s, s});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntervalAlgebra

IntervalAlgebra::IntervalAlgebra(Symbol lo, Symbol hi) : lo_(lo), hi_(hi) {
  if (lo > hi || hi > kMaxCodepoint) throw std::invalid_argument("invalid codepoint range");
}

std::string IntervalAlgebra::name() const {
  if (lo_ == 0 && hi_ == kMaxCodepoint) return "unicode";
  return "interval:" + std::to_string(lo_) + "-" + std::to_string(hi_);
}

const std::vector<Interval>& IntervalAlgebra::ranges(const SymbolSet& a) const {
  check_owner(a);
  return std::get<SymbolSet::Ranges>(a.rep()).ranges;
}

SymbolSet IntervalAlgebra::from_ranges(std::vector<Interval> in) const {
  for (Interval& r : in) {
    r.lo = std::max(r.lo, lo_);
    r.hi = std::min(r.hi, hi_);
  }
  return make(SymbolSet::Ranges{normalize_ranges(std::move(in))});
}

SymbolSet IntervalAlgebra::bottom() const { return make(SymbolSet::Ranges{}); }
SymbolSet IntervalAlgebra::top() const { return make(SymbolSet::Ranges{{{lo_, hi_}}}); }

SymbolSet IntervalAlgebra::singleton(Symbol x) const {
  if (!in_universe(x)) throw AlgebraError("symbol outside universe " + name());
  return make(SymbolSet::Ranges{{{x, x}}});
}

SymbolSet IntervalAlgebra::range(Symbol lo, Symbol hi) const {
  if (lo > hi) return bottom();
  return from_ranges({{lo, hi}});
}

SymbolSet IntervalAlgebra::unite(const SymbolSet& a, const SymbolSet& b) const {
  const auto& x = ranges(a);
  const auto& y = ranges(b);
  std::vector<Interval> all;
  all.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(all));
  return make(SymbolSet::Ranges{normalize_ranges(std::move(all))});
}

SymbolSet IntervalAlgebra::intersect(const SymbolSet& a, const SymbolSet& b) const {
  const auto& x = ranges(a);
  const auto& y = ranges(b);
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const Symbol lo = std::max(x[i].lo, y[j].lo);
    const Symbol hi = std::min(x[i].hi, y[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  // Pieces of disjoint non-adjacent inputs are themselves non-adjacent.
  return make(SymbolSet::Ranges{std::move(out)});
}

SymbolSet IntervalAlgebra::complement(const SymbolSet& a) const {
  const auto& x = ranges(a);
  std::vector<Interval> out;
  std::uint64_t cursor = lo_;
  for (const Interval& r : x) {
    if (r.lo > cursor) out.push_back({static_cast<Symbol>(cursor), r.lo - 1});
    cursor = static_cast<std::uint64_t>(r.hi) + 1;
  }
  if (cursor <= hi_) out.push_back({static_cast<Symbol>(cursor), hi_});
  return make(SymbolSet::Ranges{std::move(out)});
}

bool IntervalAlgebra::is_empty(const SymbolSet& a) const { return ranges(a).empty(); }

bool IntervalAlgebra::contains(const SymbolSet& a, Symbol x) const {
  const auto& rs = ranges(a);
  auto it = std::upper_bound(rs.begin(), rs.end(), x,
                             [](Symbol v, const Interval& r) { return v < r.lo; });
  if (it == rs.begin()) return false;
  --it;
  return x <= it->hi;
}

bool IntervalAlgebra::in_universe(Symbol x) const { return x >= lo_ && x <= hi_; }

Symbol IntervalAlgebra::pick_witness(const SymbolSet& a) const {
  const auto& rs = ranges(a);
  if (rs.empty()) throw std::invalid_argument("pick_witness on the empty set");
  return rs.front().lo;
}

std::vector<Interval> IntervalAlgebra::to_ranges(const SymbolSet& a) const { return ranges(a); }

bool IntervalAlgebra::prefer_negated(const SymbolSet& a) const {
  const auto& rs = ranges(a);
  return !rs.empty() && rs.front().lo == lo_ && rs.back().hi == hi_;
}

// ---------------------------------------------------------------------------
// FiniteCofiniteAlgebra

FiniteCofiniteAlgebra::FiniteCofiniteAlgebra(Symbol lo, Symbol hi)
    : lo_(lo), hi_(hi), universe_size_(static_cast<std::uint64_t>(hi) - lo + 1) {
  if (lo > hi || hi > kMaxCodepoint) throw std::invalid_argument("invalid codepoint range");
}

std::string FiniteCofiniteAlgebra::name() const {
  if (lo_ == 0 && hi_ == kMaxCodepoint) return "cofinite";
  return "cofinite:" + std::to_string(lo_) + "-" + std::to_string(hi_);
}

const SymbolSet::Explicit& FiniteCofiniteAlgebra::rep(const SymbolSet& a) const {
  check_owner(a);
  return std::get<SymbolSet::Explicit>(a.rep());
}

void FiniteCofiniteAlgebra::record(std::uint64_t scanned, std::uint64_t bound) const {
  operations_.fetch_add(1, std::memory_order_relaxed);
  scanned_.fetch_add(scanned, std::memory_order_relaxed);
  if (scanned > bound) {
    const std::uint64_t excess = scanned - bound;
    std::uint64_t prev = max_excess_.load(std::memory_order_relaxed);
    while (prev < excess && !max_excess_.compare_exchange_weak(prev, excess)) {
    }
  }
}

ScanStats FiniteCofiniteAlgebra::scan_stats() const {
  return {operations_.load(), scanned_.load(), max_excess_.load()};
}

void FiniteCofiniteAlgebra::reset_scan_stats() const {
  operations_ = 0;
  scanned_ = 0;
  max_excess_ = 0;
}

SymbolSet FiniteCofiniteAlgebra::canonical(bool cofinite, std::vector<Symbol> members) const {
  // Storing the whole universe explicitly is only possible for tiny universes.
  if (members.size() == universe_size_) {
    cofinite = !cofinite;
    members.clear();
  }
  return make(SymbolSet::Explicit{cofinite, std::move(members)});
}

SymbolSet FiniteCofiniteAlgebra::finite(std::vector<Symbol> members) const {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Symbol s : members) {
    if (!in_universe(s)) throw AlgebraError("symbol outside universe " + name());
  }
  return canonical(false, std::move(members));
}

SymbolSet FiniteCofiniteAlgebra::cofinite(std::vector<Symbol> excluded) const {
  return complement(finite(std::move(excluded)));
}

bool FiniteCofiniteAlgebra::is_cofinite(const SymbolSet& a) const { return rep(a).cofinite; }

const std::vector<Symbol>& FiniteCofiniteAlgebra::finite_part(const SymbolSet& a) const {
  return rep(a).members;
}

SymbolSet FiniteCofiniteAlgebra::bottom() const { return canonical(false, {}); }
SymbolSet FiniteCofiniteAlgebra::top() const { return canonical(true, {}); }

SymbolSet FiniteCofiniteAlgebra::singleton(Symbol x) const {
  if (!in_universe(x)) throw AlgebraError("symbol outside universe " + name());
  return canonical(false, {x});
}

SymbolSet FiniteCofiniteAlgebra::range(Symbol lo, Symbol hi) const {
  lo = std::max(lo, lo_);
  hi = std::min(hi, hi_);
  if (lo > hi) return bottom();
  const std::uint64_t width = static_cast<std::uint64_t>(hi) - lo + 1;
  std::vector<Symbol> members;
  if (width * 2 <= universe_size_) {
    for (std::uint64_t s = lo; s <= hi; ++s) members.push_back(static_cast<Symbol>(s));
    return canonical(false, std::move(members));
  }
  // Wide ranges are stored by their (smaller) complement.
  for (std::uint64_t s = lo_; s < lo; ++s) members.push_back(static_cast<Symbol>(s));
  for (std::uint64_t s = static_cast<std::uint64_t>(hi) + 1; s <= hi_; ++s) {
    members.push_back(static_cast<Symbol>(s));
  }
  return canonical(true, std::move(members));
}

namespace {

enum class MergeMode { kUnion, kIntersection, kDifference };

// Linear merge of two sorted vectors; `visited` counts every element read.
std::vector<Symbol> merge_sorted(const std::vector<Symbol>& x, const std::vector<Symbol>& y,
                                 MergeMode mode, std::uint64_t& visited) {
  std::vector<Symbol> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    ++visited;
    if (x[i] < y[j]) {
      if (mode != MergeMode::kIntersection) out.push_back(x[i]);
      ++i;
    } else if (y[j] < x[i]) {
      if (mode == MergeMode::kUnion) out.push_back(y[j]);
      ++j;
    } else {
      if (mode != MergeMode::kDifference) out.push_back(x[i]);
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i, ++visited) {
    if (mode != MergeMode::kIntersection) out.push_back(x[i]);
  }
  for (; j < y.size(); ++j, ++visited) {
    if (mode == MergeMode::kUnion) out.push_back(y[j]);
  }
  return out;
}

}  // namespace

SymbolSet FiniteCofiniteAlgebra::unite(const SymbolSet& a, const SymbolSet& b) const {
  const auto& x = rep(a);
  const auto& y = rep(b);
  std::uint64_t visited = 0;
  SymbolSet out;
  if (!x.cofinite && !y.cofinite) {
    out = canonical(false, merge_sorted(x.members, y.members, MergeMode::kUnion, visited));
  } else if (x.cofinite && y.cofinite) {
    out = canonical(true, merge_sorted(x.members, y.members, MergeMode::kIntersection, visited));
  } else {
    const auto& cof = x.cofinite ? x : y;
    const auto& fin = x.cofinite ? y : x;
    out = canonical(true, merge_sorted(cof.members, fin.members, MergeMode::kDifference, visited));
  }
  record(visited, x.members.size() + y.members.size() + 1);
  return out;
}

SymbolSet FiniteCofiniteAlgebra::intersect(const SymbolSet& a, const SymbolSet& b) const {
  const auto& x = rep(a);
  const auto& y = rep(b);
  std::uint64_t visited = 0;
  SymbolSet out;
  if (!x.cofinite && !y.cofinite) {
    out = canonical(false, merge_sorted(x.members, y.members, MergeMode::kIntersection, visited));
  } else if (x.cofinite && y.cofinite) {
    out = canonical(true, merge_sorted(x.members, y.members, MergeMode::kUnion, visited));
  } else {
    const auto& cof = x.cofinite ? x : y;
    const auto& fin = x.cofinite ? y : x;
    out = canonical(false, merge_sorted(fin.members, cof.members, MergeMode::kDifference, visited));
  }
  record(visited, x.members.size() + y.members.size() + 1);
  return out;
}

SymbolSet FiniteCofiniteAlgebra::complement(const SymbolSet& a) const {
  const auto& x = rep(a);
  record(x.members.size(), x.members.size() + 1);
  return canonical(!x.cofinite, x.members);
}

bool FiniteCofiniteAlgebra::is_empty(const SymbolSet& a) const {
  const auto& x = rep(a);
  return !x.cofinite && x.members.empty();
}

bool FiniteCofiniteAlgebra::contains(const SymbolSet& a, Symbol s) const {
  const auto& x = rep(a);
  if (!in_universe(s)) return false;
  const bool listed = std::binary_search(x.members.begin(), x.members.end(), s);
  record(1, x.members.size() + 1);
  return listed != x.cofinite;
}

bool FiniteCofiniteAlgebra::in_universe(Symbol x) const { return x >= lo_ && x <= hi_; }

Symbol FiniteCofiniteAlgebra::pick_witness(const SymbolSet& a) const {
  const auto& x = rep(a);
  if (is_empty(a)) throw std::invalid_argument("pick_witness on the empty set");
  if (!x.cofinite) {
    record(1, x.members.size() + 1);
    return x.members.front();
  }
  // Least symbol not excluded: walk the excluded list until the first gap.
  std::uint64_t candidate = lo_;
  std::uint64_t visited = 0;
  for (Symbol s : x.members) {
    ++visited;
    if (s != candidate) break;
    ++candidate;
  }
  record(visited, x.members.size() + 1);
  return static_cast<Symbol>(candidate);
}

std::vector<Interval> FiniteCofiniteAlgebra::to_ranges(const SymbolSet& a) const {
  const auto& x = rep(a);
  if (x.cofinite) {
    throw std::logic_error("cofinite sets are formatted through their complement");
  }
  std::vector<Interval> out;
  for (Symbol s : x.members) {
    if (!out.empty() && out.back().hi + 1 == s) {
      out.back().hi = s;
    } else {
      out.push_back({s, s});
    }
  }
  return out;
}

bool FiniteCofiniteAlgebra::prefer_negated(const SymbolSet& a) const { return rep(a).cofinite; }

}  // namespace ere
