#ifndef ERE_ALPHABET_HPP_
#define ERE_ALPHABET_HPP_

// Effective boolean algebras over symbol sets.
//
// An Algebra fixes a universe of symbols and implements the boolean
// operations on SymbolSet values it created. Three algebras are provided:
//
//   BitsetAlgebra          an explicit alphabet of at most 64 symbols
//   IntervalAlgebra        sorted disjoint codepoint ranges
//   FiniteCofiniteAlgebra  finite sets and their complements
//
// SymbolSets are immutable values. Every representation is canonical, so
// structural equality coincides with equality of denotations.

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ere {

// A codepoint. Symbols are ordered numerically in every built-in algebra.
using Symbol = char32_t;

inline constexpr Symbol kMaxCodepoint = 0x10FFFF;

struct Interval {
  Symbol lo;
  Symbol hi;  // inclusive

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Raised when sets from different algebra instances are mixed, or when a
// symbol lies outside the algebra's universe.
class AlgebraError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace rep {
struct Bits {
  std::uint64_t mask = 0;
  friend bool operator==(const Bits&, const Bits&) = default;
};
struct Ranges {
  std::vector<Interval> ranges;  // sorted, disjoint, non-adjacent
  friend bool operator==(const Ranges&, const Ranges&) = default;
};
struct Explicit {
  bool cofinite = false;
  std::vector<Symbol> members;  // sorted; the excluded symbols if cofinite
  friend bool operator==(const Explicit&, const Explicit&) = default;
};
}  // namespace rep

class SymbolSet {
 public:
  using Bits = rep::Bits;
  using Ranges = rep::Ranges;
  using Explicit = rep::Explicit;
  using Rep = std::variant<Bits, Ranges, Explicit>;

  // An unowned set. Every algebra operation rejects it.
  SymbolSet() = default;

  std::uint32_t owner() const { return owner_; }
  const Rep& rep() const { return rep_; }

  std::size_t hash() const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

 private:
  friend class Algebra;
  SymbolSet(std::uint32_t owner, Rep rep) : owner_(owner), rep_(std::move(rep)) {}

  std::uint32_t owner_ = 0;
  Rep rep_;
};

struct SymbolSetHash {
  std::size_t operator()(const SymbolSet& s) const { return s.hash(); }
};

class Algebra {
 public:
  Algebra();
  virtual ~Algebra() = default;
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  std::uint32_t id() const { return id_; }
  virtual std::string name() const = 0;

  virtual SymbolSet bottom() const = 0;
  virtual SymbolSet top() const = 0;
  // Throws AlgebraError if x is not in the universe.
  virtual SymbolSet singleton(Symbol x) const = 0;
  // All universe symbols in [lo, hi]; empty if lo > hi.
  virtual SymbolSet range(Symbol lo, Symbol hi) const = 0;

  virtual SymbolSet unite(const SymbolSet& a, const SymbolSet& b) const = 0;
  virtual SymbolSet intersect(const SymbolSet& a, const SymbolSet& b) const = 0;
  virtual SymbolSet complement(const SymbolSet& a) const = 0;

  virtual bool is_empty(const SymbolSet& a) const = 0;
  bool is_equal(const SymbolSet& a, const SymbolSet& b) const;
  bool is_subset(const SymbolSet& a, const SymbolSet& b) const;
  bool is_top(const SymbolSet& a) const { return is_equal(a, top()); }

  virtual bool contains(const SymbolSet& a, Symbol x) const = 0;
  virtual bool in_universe(Symbol x) const = 0;

  // The least member of a non-empty set. Throws std::invalid_argument on ⊥.
  virtual Symbol pick_witness(const SymbolSet& a) const = 0;

  // Class syntax accepted by the parser: a single (escaped) character,
  // `.` for the universe, `[]` for the empty set, otherwise `[...]` or
  // `[^...]`.
  std::string format(const SymbolSet& a) const;

 protected:
  SymbolSet make(SymbolSet::Rep rep) const { return SymbolSet(id_, std::move(rep)); }
  void check_owner(const SymbolSet& a) const;

  // Inclusive ranges making up `a`, ascending.
  virtual std::vector<Interval> to_ranges(const SymbolSet& a) const = 0;
  // Whether format() should print the complement as `[^...]`.
  virtual bool prefer_negated(const SymbolSet& a) const = 0;

 private:
  std::uint32_t id_;
};

// Explicit alphabet of at most 64 distinct symbols; a set is a bit mask
// indexed by the symbol's rank in ascending order.
class BitsetAlgebra final : public Algebra {
 public:
  explicit BitsetAlgebra(std::u32string_view symbols);

  std::string name() const override;
  const std::u32string& universe() const { return universe_; }

  SymbolSet bottom() const override;
  SymbolSet top() const override;
  SymbolSet singleton(Symbol x) const override;
  SymbolSet range(Symbol lo, Symbol hi) const override;
  SymbolSet unite(const SymbolSet& a, const SymbolSet& b) const override;
  SymbolSet intersect(const SymbolSet& a, const SymbolSet& b) const override;
  SymbolSet complement(const SymbolSet& a) const override;
  bool is_empty(const SymbolSet& a) const override;
  bool contains(const SymbolSet& a, Symbol x) const override;
  bool in_universe(Symbol x) const override;
  Symbol pick_witness(const SymbolSet& a) const override;

  std::uint64_t mask(const SymbolSet& a) const;
  SymbolSet from_mask(std::uint64_t mask) const;
  // Members of `a` in ascending order.
  std::u32string members(const SymbolSet& a) const;

 protected:
  std::vector<Interval> to_ranges(const SymbolSet& a) const override;
  bool prefer_negated(const SymbolSet&) const override { return false; }

 private:
  int index_of(Symbol x) const;

  std::u32string universe_;
  std::uint64_t full_;
};

// Sets of codepoints in [lo, hi] as sorted, disjoint, non-adjacent ranges.
class IntervalAlgebra final : public Algebra {
 public:
  explicit IntervalAlgebra(Symbol lo = 0, Symbol hi = kMaxCodepoint);

  std::string name() const override;
  Symbol lo() const { return lo_; }
  Symbol hi() const { return hi_; }

  SymbolSet bottom() const override;
  SymbolSet top() const override;
  SymbolSet singleton(Symbol x) const override;
  SymbolSet range(Symbol lo, Symbol hi) const override;
  SymbolSet unite(const SymbolSet& a, const SymbolSet& b) const override;
  SymbolSet intersect(const SymbolSet& a, const SymbolSet& b) const override;
  SymbolSet complement(const SymbolSet& a) const override;
  bool is_empty(const SymbolSet& a) const override;
  bool contains(const SymbolSet& a, Symbol x) const override;
  bool in_universe(Symbol x) const override;
  Symbol pick_witness(const SymbolSet& a) const override;

  const std::vector<Interval>& ranges(const SymbolSet& a) const;
  SymbolSet from_ranges(std::vector<Interval> ranges) const;

 protected:
  std::vector<Interval> to_ranges(const SymbolSet& a) const override;
  bool prefer_negated(const SymbolSet& a) const override;

 private:
  Symbol lo_;
  Symbol hi_;
};

// Counters kept by FiniteCofiniteAlgebra. `scanned` is the number of
// symbols visited by set operations; `max_excess` the largest amount by
// which a single operation visited more symbols than the finite parts of
// its operands (plus one). A correct implementation keeps it at zero.
struct ScanStats {
  std::uint64_t operations = 0;
  std::uint64_t scanned = 0;
  std::uint64_t max_excess = 0;
};

// Finite subsets of [lo, hi] and their complements. Only the finite part is
// ever stored or iterated; cofinite sets never enumerate the universe.
class FiniteCofiniteAlgebra final : public Algebra {
 public:
  explicit FiniteCofiniteAlgebra(Symbol lo = 0, Symbol hi = kMaxCodepoint);

  std::string name() const override;

  SymbolSet bottom() const override;
  SymbolSet top() const override;
  SymbolSet singleton(Symbol x) const override;
  SymbolSet range(Symbol lo, Symbol hi) const override;
  SymbolSet unite(const SymbolSet& a, const SymbolSet& b) const override;
  SymbolSet intersect(const SymbolSet& a, const SymbolSet& b) const override;
  SymbolSet complement(const SymbolSet& a) const override;
  bool is_empty(const SymbolSet& a) const override;
  bool contains(const SymbolSet& a, Symbol x) const override;
  bool in_universe(Symbol x) const override;
  Symbol pick_witness(const SymbolSet& a) const override;

  SymbolSet finite(std::vector<Symbol> members) const;
  SymbolSet cofinite(std::vector<Symbol> excluded) const;
  bool is_cofinite(const SymbolSet& a) const;
  // The stored finite part: the members, or the excluded symbols.
  const std::vector<Symbol>& finite_part(const SymbolSet& a) const;

  ScanStats scan_stats() const;
  void reset_scan_stats() const;

 protected:
  std::vector<Interval> to_ranges(const SymbolSet& a) const override;
  bool prefer_negated(const SymbolSet& a) const override;

 private:
  const SymbolSet::Explicit& rep(const SymbolSet& a) const;
  SymbolSet canonical(bool cofinite, std::vector<Symbol> members) const;
  void record(std::uint64_t scanned, std::uint64_t bound) const;

  Symbol lo_;
  Symbol hi_;
  std::uint64_t universe_size_;
  mutable std::atomic<std::uint64_t> operations_{0};
  mutable std::atomic<std::uint64_t> scanned_{0};
  mutable std::atomic<std::uint64_t> max_excess_{0};
};

// Appends the class-syntax escape of `x` (used both for single characters
// and inside brackets).
void append_escaped(std::string& out, Symbol x, bool in_class);

// UTF-8 helpers.
void append_utf8(std::string& out, Symbol x);
std::u32string decode_utf8(std::string_view text);

}  // namespace ere

#endif  // ERE_ALPHABET_HPP_
