#include "repbasis/repcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "repbasis/error.hpp"
#include "repbasis/kernels.hpp"

namespace repbasis {

// ---------------------------------------------------------------- RepTarget

RepTarget::RepTarget(std::int64_t window, std::vector<RepValue> values, RepValue default_value)
    : window_(window), values_(std::move(values)), default_(default_value) {
  if (window_ < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "target window must be nonnegative");
  }
  if (values_.size() != static_cast<std::size_t>(2 * window_ + 1)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "target needs exactly 2W+1 window values, got " + std::to_string(values_.size()));
  }
  if (default_ < RepValue(1)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "target default must be >= 1 so that its zero set is finite");
  }
}

RepTarget RepTarget::constant(RepValue v) { return RepTarget(0, {v}, v); }

RepTarget RepTarget::with_overrides(std::int64_t window,
                                    const std::map<std::int64_t, RepValue>& overrides,
                                    RepValue default_value) {
  if (window < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "target window must be nonnegative");
  }
  std::vector<RepValue> values(static_cast<std::size_t>(2 * window + 1), default_value);
  for (const auto& [n, v] : overrides) {
    if (n < -window || n > window) {
      throw Error(ErrorCode::kPreconditionViolated, "target override outside window", n);
    }
    values[static_cast<std::size_t>(n + window)] = v;
  }
  return RepTarget(window, std::move(values), default_value);
}

RepValue RepTarget::at(std::int64_t n) const {
  if (n < -window_ || n > window_) return default_;
  return values_[static_cast<std::size_t>(n + window_)];
}

std::uint64_t RepTarget::max_finite() const {
  std::uint64_t best = default_.is_infinite() ? 0 : default_.value();
  for (RepValue v : values_) {
    if (!v.is_infinite()) best = std::max(best, v.value());
  }
  return best;
}

// -------------------------------------------------------------- FiniteBasis

FiniteBasis::FiniteBasis(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FiniteBasis::FiniteBasis(std::initializer_list<std::int64_t> elements)
    : FiniteBasis(std::vector<std::int64_t>(elements)) {}

bool FiniteBasis::contains(std::int64_t a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

bool FiniteBasis::includes(const FiniteBasis& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(),
                       other.elements_.end());
}

std::int64_t FiniteBasis::max_abs() const {
  if (elements_.empty()) return 0;
  return std::max(checked::abs(elements_.front()), checked::abs(elements_.back()));
}

FiniteBasis FiniteBasis::united(std::span<const std::int64_t> extra) const {
  std::vector<std::int64_t> all(elements_);
  all.insert(all.end(), extra.begin(), extra.end());
  return FiniteBasis(std::move(all));
}

// --------------------------------------------------------------- RepProfile

RepProfile::RepProfile(std::int64_t lo, std::int64_t hi, std::vector<Entry> entries)
    : lo_(lo), hi_(hi), entries_(std::move(entries)) {}

std::uint64_t RepProfile::at(std::int64_t n) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                             [](const Entry& e, std::int64_t key) { return e.first < key; });
  if (it == entries_.end() || it->first != n) return 0;
  return it->second;
}

std::uint64_t RepProfile::total() const {
  std::uint64_t sum = 0;
  for (const auto& [n, c] : entries_) sum += c;
  return sum;
}

std::uint64_t RepProfile::max_count() const {
  std::uint64_t best = 0;
  for (const auto& [n, c] : entries_) best = std::max(best, c);
  return best;
}

// ------------------------------------------------------------- set functions

std::uint64_t rep_function(const FiniteBasis& a, std::int64_t n) {
  auto e = a.elements();
  if (e.empty()) return 0;
  std::uint64_t count = 0;
  std::size_t i = 0;
  std::size_t j = e.size() - 1;
  // Two-pointer walk over a <= b; compares in 128 bits so any int64 set works.
  while (i <= j) {
    const __int128 s = static_cast<__int128>(e[i]) + e[j];
    if (s == n) {
      ++count;
      ++i;
      if (j == 0) break;
      --j;
    } else if (s < n) {
      ++i;
    } else {
      if (j == 0) break;
      --j;
    }
  }
  return count;
}

RepProfile rep_profile(const FiniteBasis& a) {
  if (a.empty()) throw Error(ErrorCode::kEmptySet, "rep_profile of the empty set");
  const std::int64_t m = a.max_abs();
  if (m > kMaxElementMagnitude) {
    throw Error(ErrorCode::kOverflow, "element magnitude exceeds 2^62", m);
  }
  std::vector<std::int64_t> sums(kernels::pair_count(a.size()));
  kernels::active().pair_sums(a.elements(), sums.data());
  std::sort(sums.begin(), sums.end());

  std::vector<RepProfile::Entry> entries;
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    entries.emplace_back(sums[i], static_cast<std::uint64_t>(j - i));
    i = j;
  }
  return RepProfile(-2 * m, 2 * m, std::move(entries));
}

std::size_t counting(const FiniteBasis& a, std::int64_t y, std::int64_t x) {
  if (y > x) return 0;
  auto e = a.elements();
  auto first = std::lower_bound(e.begin(), e.end(), y);
  auto last = std::upper_bound(e.begin(), e.end(), x);
  return first < last ? static_cast<std::size_t>(last - first) : 0;
}

std::size_t counting(const FiniteBasis& a, long double y, long double x) {
  if (std::isnan(y) || std::isnan(x) || y > x) return 0;
  constexpr long double kLow = -9.2e18L;
  constexpr long double kHigh = 9.2e18L;
  const long double lo = std::ceil(std::clamp(y, kLow, kHigh));
  const long double hi = std::floor(std::clamp(x, kLow, kHigh));
  if (lo > hi) return 0;
  return counting(a, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi));
}

std::int64_t d0_of(const RepTarget& f) {
  std::int64_t d0 = 1;
  const std::int64_t w = f.window();
  for (std::int64_t n = -w; n <= w; ++n) {
    if (f.at(n) == RepValue(0)) d0 = std::max(d0, (n < 0 ? -n : n) + 1);
  }
  return d0;
}

// ----------------------------------------------------------- TargetSequence

TargetSequence::TargetSequence(RepTarget f) : f_(std::move(f)) {}

void TargetSequence::step() {
  // scan_ walks the spiral 0, 1, -1, 2, -2, ... through index 2 * stage_.
  if (scan_ > 2 * stage_) {
    ++stage_;
    scan_ = 0;
  }
  const std::int64_t half = (scan_ + 1) / 2;
  const std::int64_t n = (scan_ % 2 == 1) ? half : -half;
  ++scan_;

  const RepValue fn = f_.at(n);
  const std::uint64_t cap =
      fn.is_infinite() ? static_cast<std::uint64_t>(stage_)
                       : std::min(fn.value(), static_cast<std::uint64_t>(stage_));
  std::uint64_t& seen = counts_[n];
  if (cap > seen) {
    ++seen;
    emitted_.push_back(n);
  }
}

void TargetSequence::extend_to(std::size_t m) {
  while (emitted_.size() < m) step();
}

std::int64_t TargetSequence::term(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kPreconditionViolated, "target sequence is 1-based");
  extend_to(k);
  return emitted_[k - 1];
}

std::uint64_t TargetSequence::occurrences(std::int64_t n, std::size_t m) {
  extend_to(m);
  return prefix_occurrences(std::span(emitted_).first(m), n);
}

std::vector<std::int64_t> target_prefix(const RepTarget& f, std::size_t m) {
  TargetSequence u(f);
  u.extend_to(m);
  auto e = u.emitted();
  return {e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m)};
}

std::uint64_t prefix_occurrences(std::span<const std::int64_t> prefix, std::int64_t n) {
  return static_cast<std::uint64_t>(std::count(prefix.begin(), prefix.end(), n));
}

}  // namespace repbasis
