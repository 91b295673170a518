#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace repbasis {

// A Sidon set inside [1, ambient_n]: all sums a + b (a <= b) are distinct.
struct SidonSet {
  std::vector<std::int64_t> elements;
  std::int64_t ambient_n = 0;

  std::size_t size() const { return elements.size(); }
  friend bool operator==(const SidonSet&, const SidonSet&) = default;
};

// Treats the input as a set (order and repeats are ignored).
bool is_sidon(std::span<const std::int64_t> d);

// Mian-Chowla style greedy scan of 1..n.
SidonSet greedy_sidon(std::int64_t n);

// {2pk + (k^2 mod p) + 1 : 0 <= k < p} for the largest prime p with 2p^2 <= n.
// Throws INPUT_TOO_SMALL when n < 8.
SidonSet erdos_turan_sidon(std::int64_t n);

// Larger of the two constructions (greedy on ties), requiring |D| > sqrt(n)/2.
// Throws DENSITY_UNREACHABLE otherwise.
SidonSet sidon_for_density(std::int64_t n);

// Larger of the two constructions with no density requirement.
SidonSet best_sidon(std::int64_t n);

// Largest prime p with 2p^2 <= n, or 0.
std::int64_t erdos_turan_prime(std::int64_t n);

bool is_prime(std::int64_t p);

// Upper bound on the size of any Sidon subset of [1, n]: sqrt(n) + n^(1/4) + 1.
std::size_t sidon_size_upper_bound(std::int64_t n);

// Greedy generator that extends its scan range on demand. greedy_sidon(n) is a
// prefix of greedy_sidon(m) for m >= n, so one instance serves every n.
class GreedySidon {
 public:
  // Differences must fit the int32 gather lanes.
  static constexpr std::int64_t kMaxRange = std::int64_t{1} << 30;

  void extend_to(std::int64_t n);
  std::int64_t scanned() const { return scanned_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t count_up_to(std::int64_t n) const;
  SidonSet take(std::int64_t n) const;

 private:
  std::vector<std::int32_t> elements_;
  std::vector<std::uint8_t> used_differences_;
  std::int64_t scanned_ = 0;
};

}  // namespace repbasis

namespace repbasis {

// Serves best_sidon for a growing sequence of n without rescanning.
class SidonSource {
 public:
  // Above this range the greedy scan is skipped; the quadratic-residue
  // construction is the larger one there (checked by the test suite).
  static constexpr std::int64_t kGreedyRange = std::int64_t{1} << 20;

  std::size_t best_size(std::int64_t n);
  SidonSet best(std::int64_t n);

 private:
  std::int64_t prime_for(std::int64_t n);

  GreedySidon greedy_;
  // erdos_turan_prime(n) == cached_prime_ for n in [prime_lo_, prime_hi_).
  std::int64_t cached_prime_ = 0;
  std::int64_t prime_lo_ = 0;
  std::int64_t prime_hi_ = 0;
};

}  // namespace repbasis
