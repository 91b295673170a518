#pragma once

// Exact arithmetic over finite integer sets: representation functions,
// counting functions, prescribed representation targets and the target
// sequence that enumerates every integer with its prescribed multiplicity.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace repbasis {

// A value in N0 ∪ {inf}. Infinity compares above every finite value.
class RepValue {
 public:
  constexpr RepValue() = default;
  constexpr explicit RepValue(std::uint64_t v) : raw_(v) {}

  static constexpr RepValue infinity() {
    return RepValue(std::numeric_limits<std::uint64_t>::max());
  }

  constexpr bool is_infinite() const { return raw_ == infinity().raw_; }
  constexpr std::uint64_t value() const { return raw_; }

  // count <= *this
  constexpr bool admits(std::uint64_t count) const { return is_infinite() || count <= raw_; }

  friend constexpr auto operator<=>(RepValue, RepValue) = default;

 private:
  std::uint64_t raw_ = 0;
};

// The prescribed function f: Z -> N0 ∪ {inf}. Values inside [-W, W] are stored
// densely; every |n| > W maps to the default, which must be >= 1 so that the
// zero set of f is finite.
class RepTarget {
 public:
  RepTarget(std::int64_t window, std::vector<RepValue> values, RepValue default_value);

  static RepTarget constant(RepValue v);
  static RepTarget with_overrides(std::int64_t window,
                                  const std::map<std::int64_t, RepValue>& overrides,
                                  RepValue default_value);

  std::int64_t window() const { return window_; }
  RepValue default_value() const { return default_; }
  RepValue at(std::int64_t n) const;
  std::span<const RepValue> window_values() const { return values_; }

  // Largest finite value among the window entries and the default, or 0.
  std::uint64_t max_finite() const;

  friend bool operator==(const RepTarget&, const RepTarget&) = default;

 private:
  std::int64_t window_;
  std::vector<RepValue> values_;
  RepValue default_;
};

// A finite set of integers kept strictly increasing. The construction keeps 0
// out of every stage; the type itself admits 0 so that corrupted stages can be
// represented and rejected by the verifier.
class FiniteBasis {
 public:
  FiniteBasis() = default;
  explicit FiniteBasis(std::vector<std::int64_t> elements);
  FiniteBasis(std::initializer_list<std::int64_t> elements);

  std::span<const std::int64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::int64_t a) const;
  bool contains_zero() const { return contains(0); }
  bool includes(const FiniteBasis& other) const;

  // max |a|, 0 for the empty set.
  std::int64_t max_abs() const;

  FiniteBasis united(std::span<const std::int64_t> extra) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const FiniteBasis&, const FiniteBasis&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

// Sparse r_A: only sums with nonzero count are stored. Every sum of two
// elements lies in [lo, hi] = [-2 max|a|, 2 max|a|].
class RepProfile {
 public:
  using Entry = std::pair<std::int64_t, std::uint64_t>;

  RepProfile(std::int64_t lo, std::int64_t hi, std::vector<Entry> entries);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::uint64_t at(std::int64_t n) const;
  std::span<const Entry> entries() const { return entries_; }
  std::uint64_t total() const;
  std::uint64_t max_count() const;

 private:
  std::int64_t lo_;
  std::int64_t hi_;
  std::vector<Entry> entries_;
};

// Largest element magnitude for which every pairwise sum still fits in int64.
inline constexpr std::int64_t kMaxElementMagnitude = std::int64_t{1} << 62;

std::uint64_t rep_function(const FiniteBasis& a, std::int64_t n);
RepProfile rep_profile(const FiniteBasis& a);

std::size_t counting(const FiniteBasis& a, std::int64_t y, std::int64_t x);
std::size_t counting(const FiniteBasis& a, long double y, long double x);

std::int64_t d0_of(const RepTarget& f);

// Prefix-stable enumeration u_1, u_2, ... in which each n occurs exactly f(n)
// times. Stage t scans 0, 1, -1, ..., t, -t and emits n when
// min(f(n), t) exceeds the number of times n was already emitted.
class TargetSequence {
 public:
  explicit TargetSequence(RepTarget f);

  const RepTarget& target() const { return f_; }
  std::span<const std::int64_t> emitted() const { return emitted_; }

  void extend_to(std::size_t m);

  // 1-based term u_k; extends as needed.
  std::int64_t term(std::size_t k);

  // #{i <= m : u_i = n}; extends as needed.
  std::uint64_t occurrences(std::int64_t n, std::size_t m);

 private:
  void step();

  RepTarget f_;
  std::vector<std::int64_t> emitted_;
  std::map<std::int64_t, std::uint64_t> counts_;
  std::int64_t stage_ = 1;
  std::int64_t scan_ = 0;
};

std::vector<std::int64_t> target_prefix(const RepTarget& f, std::size_t m);

// #{i < prefix.size() : prefix[i] = n}
std::uint64_t prefix_occurrences(std::span<const std::int64_t> prefix, std::int64_t n);

}  // namespace repbasis
