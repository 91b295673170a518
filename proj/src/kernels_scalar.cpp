#include "repbasis/kernels.hpp"

namespace repbasis::kernels::detail {

void scalar_pair_sums(std::span<const std::int64_t> a, std::int64_t* out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t ai = a[i];
    for (std::size_t j = i; j < n; ++j) {
      *out++ = ai + a[j];
    }
  }
}

bool scalar_has_adjacent_equal(std::span<const std::int64_t> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] == v[i]) return true;
  }
  return false;
}

bool scalar_any_difference_marked(const std::uint8_t* marks, std::int32_t candidate,
                                  std::span<const std::int32_t> elements) {
  for (std::int32_t e : elements) {
    if (marks[candidate - e] != 0) return true;
  }
  return false;
}

}  // namespace repbasis::kernels::detail
