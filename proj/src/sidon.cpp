#include "repbasis/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "repbasis/error.hpp"
#include "repbasis/kernels.hpp"
#include "repbasis/phi.hpp"
#include "repbasis/repcore.hpp"

namespace repbasis {

bool is_sidon(std::span<const std::int64_t> d) {
  FiniteBasis set(std::vector<std::int64_t>(d.begin(), d.end()));
  if (set.size() < 2) return true;
  if (set.max_abs() > kMaxElementMagnitude) {
    throw Error(ErrorCode::kOverflow, "element magnitude exceeds 2^62", set.max_abs());
  }
  const auto& k = kernels::active();
  std::vector<std::int64_t> sums(kernels::pair_count(set.size()));
  k.pair_sums(set.elements(), sums.data());
  std::sort(sums.begin(), sums.end());
  return !k.has_adjacent_equal(sums);
}

// --------------------------------------------------------------- GreedySidon

void GreedySidon::extend_to(std::int64_t n) {
  if (n <= scanned_) return;
  if (n > kMaxRange) {
    throw Error(ErrorCode::kPreconditionViolated,
                "greedy Sidon scan limited to " + std::to_string(kMaxRange), n);
  }
  // Differences are < n; 4 bytes of slack for the gather kernel.
  used_differences_.resize(static_cast<std::size_t>(n) + 4, 0);
  const auto& k = kernels::active();
  for (std::int64_t c = scanned_ + 1; c <= n; ++c) {
    const auto cand = static_cast<std::int32_t>(c);
    if (k.any_difference_marked(used_differences_.data(), cand, elements_)) continue;
    for (std::int32_t e : elements_) used_differences_[static_cast<std::size_t>(cand - e)] = 1;
    elements_.push_back(cand);
  }
  scanned_ = n;
}

std::size_t GreedySidon::count_up_to(std::int64_t n) const {
  return static_cast<std::size_t>(
      std::upper_bound(elements_.begin(), elements_.end(), n) - elements_.begin());
}

SidonSet GreedySidon::take(std::int64_t n) const {
  SidonSet out;
  out.ambient_n = n;
  for (std::int32_t e : elements_) {
    if (e > n) break;
    out.elements.push_back(e);
  }
  return out;
}

SidonSet greedy_sidon(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "greedy_sidon needs n >= 1", n);
  GreedySidon g;
  g.extend_to(n);
  return g.take(n);
}

// ---------------------------------------------------------------- Erdos-Turan

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t q = 3; q <= p / q; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

std::int64_t erdos_turan_prime(std::int64_t n) {
  if (n < 8) return 0;
  auto p = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n) / 2.0L));
  while (p > 0 && 2 * p * p > n) --p;
  while (2 * (p + 1) * (p + 1) <= n) ++p;
  while (p >= 2 && !is_prime(p)) --p;
  return p >= 2 ? p : 0;
}

SidonSet erdos_turan_sidon(std::int64_t n) {
  const std::int64_t p = erdos_turan_prime(n);
  if (p == 0) {
    throw Error(ErrorCode::kInputTooSmall, "no prime p with 2p^2 <= n", n);
  }
  SidonSet out;
  out.ambient_n = n;
  out.elements.reserve(static_cast<std::size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) {
    out.elements.push_back(2 * p * k + (k * k) % p + 1);
  }
  return out;
}

// ----------------------------------------------------------------- selection

std::size_t sidon_size_upper_bound(std::int64_t n) {
  if (n < 1) return 0;
  const long double nv = static_cast<long double>(n);
  return static_cast<std::size_t>(std::floor(std::sqrt(nv) + std::sqrt(std::sqrt(nv)) + 1.0L));
}

SidonSet best_sidon(std::int64_t n) {
  SidonSource source;
  return source.best(n);
}

SidonSet sidon_for_density(std::int64_t n) {
  SidonSet d = best_sidon(n);
  const long double needed = std::sqrt(static_cast<long double>(n)) / 2.0L;
  if (!strictly_exceeds(static_cast<long double>(d.size()), needed)) {
    throw Error(ErrorCode::kDensityUnreachable,
                "no Sidon set in [1, n] larger than sqrt(n)/2 from either construction", n);
  }
  return d;
}

}  // namespace repbasis

namespace repbasis {

std::int64_t SidonSource::prime_for(std::int64_t n) {
  if (n >= prime_lo_ && n < prime_hi_) return cached_prime_;
  cached_prime_ = erdos_turan_prime(n);
  if (cached_prime_ == 0) {
    prime_lo_ = 0;
    prime_hi_ = 8;
  } else {
    std::int64_t next = cached_prime_ + 1;
    while (!is_prime(next)) ++next;
    prime_lo_ = 2 * cached_prime_ * cached_prime_;
    prime_hi_ = next > 2'000'000'000 ? prime_lo_ + 1 : 2 * next * next;
  }
  return cached_prime_;
}

std::size_t SidonSource::best_size(std::int64_t n) {
  const auto p = static_cast<std::size_t>(prime_for(n));
  if (n > kGreedyRange) return p;
  greedy_.extend_to(n);
  return std::max(p, greedy_.count_up_to(n));
}

SidonSet SidonSource::best(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "Sidon range needs n >= 1", n);
  const std::int64_t p = prime_for(n);
  if (n > kGreedyRange) return erdos_turan_sidon(n);
  greedy_.extend_to(n);
  if (p != 0 && static_cast<std::size_t>(p) > greedy_.count_up_to(n)) return erdos_turan_sidon(n);
  return greedy_.take(n);
}

}  // namespace repbasis
