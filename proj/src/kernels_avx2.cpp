#include <immintrin.h>

#include "repbasis/kernels.hpp"

namespace repbasis::kernels::detail {

void avx2_pair_sums(std::span<const std::int64_t> a, std::int64_t* out) {
  const std::size_t n = a.size();
  const std::int64_t* src = a.data();
  for (std::size_t i = 0; i < n; ++i) {
    const __m256i lhs = _mm256_set1_epi64x(src[i]);
    std::size_t j = i;
    for (; j + 4 <= n; j += 4) {
      const __m256i rhs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + j));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), _mm256_add_epi64(lhs, rhs));
      out += 4;
    }
    for (; j < n; ++j) {
      *out++ = src[i] + src[j];
    }
  }
}

bool avx2_has_adjacent_equal(std::span<const std::int64_t> v) {
  const std::size_t n = v.size();
  const std::int64_t* p = v.data();
  std::size_t i = 0;
  for (; i + 5 <= n; i += 4) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i + 1));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi64(lo, hi)) != 0) return true;
  }
  for (i = i + 1; i < n; ++i) {
    if (p[i - 1] == p[i]) return true;
  }
  return false;
}

bool avx2_any_difference_marked(const std::uint8_t* marks, std::int32_t candidate,
                                std::span<const std::int32_t> elements) {
  const std::size_t n = elements.size();
  const std::int32_t* e = elements.data();
  const __m256i cand = _mm256_set1_epi32(candidate);
  const __m256i low_byte = _mm256_set1_epi32(0xff);
  const int* base = reinterpret_cast<const int*>(marks);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i ev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(e + i));
    const __m256i diff = _mm256_sub_epi32(cand, ev);
    const __m256i words = _mm256_i32gather_epi32(base, diff, 1);
    const __m256i bytes = _mm256_and_si256(words, low_byte);
    if (!_mm256_testz_si256(bytes, bytes)) return true;
  }
  for (; i < n; ++i) {
    if (marks[candidate - e[i]] != 0) return true;
  }
  return false;
}

}  // namespace repbasis::kernels::detail
