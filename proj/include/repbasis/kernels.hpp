#pragma once

// Inner loops of the sumset machinery. Each kernel has a portable scalar
// reference and, on x86-64, an AVX2 variant chosen at runtime. Both variants
// must produce identical results; the tests hold them to that.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace repbasis::kernels {

// Number of pairs (i, j), i <= j, over n elements.
constexpr std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

struct KernelTable {
  std::string_view name;

  // Writes a[i] + a[j] for all i <= j, row by row, into out (size
  // pair_count(a.size())). Callers guarantee |a[i]| <= 2^62.
  void (*pair_sums)(std::span<const std::int64_t> a, std::int64_t* out);

  // True iff some v[i] == v[i + 1].
  bool (*has_adjacent_equal)(std::span<const std::int64_t> v);

  // True iff marks[candidate - e] != 0 for some e in elements. Every e is in
  // [1, candidate) and marks is readable up to index candidate + 3.
  bool (*any_difference_marked)(const std::uint8_t* marks, std::int32_t candidate,
                                std::span<const std::int32_t> elements);
};

const KernelTable& scalar();

// nullptr when this build or this CPU has no AVX2 path.
const KernelTable* avx2();

// The table used by the library. Honors REPBASIS_KERNELS=scalar.
const KernelTable& active();

namespace detail {
void scalar_pair_sums(std::span<const std::int64_t> a, std::int64_t* out);
bool scalar_has_adjacent_equal(std::span<const std::int64_t> v);
bool scalar_any_difference_marked(const std::uint8_t* marks, std::int32_t candidate,
                                  std::span<const std::int32_t> elements);
#ifdef REPBASIS_HAVE_AVX2_KERNELS
void avx2_pair_sums(std::span<const std::int64_t> a, std::int64_t* out);
bool avx2_has_adjacent_equal(std::span<const std::int64_t> v);
bool avx2_any_difference_marked(const std::uint8_t* marks, std::int32_t candidate,
                                std::span<const std::int32_t> elements);
#endif
}  // namespace detail

}  // namespace repbasis::kernels
