#include <cstdlib>
#include <string_view>

#include "repbasis/kernels.hpp"

namespace repbasis::kernels {

namespace {

constexpr KernelTable kScalar{
    "scalar",
    &detail::scalar_pair_sums,
    &detail::scalar_has_adjacent_equal,
    &detail::scalar_any_difference_marked,
};

#ifdef REPBASIS_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{
    "avx2",
    &detail::avx2_pair_sums,
    &detail::avx2_has_adjacent_equal,
    &detail::avx2_any_difference_marked,
};
#endif

const KernelTable& select() {
  const char* forced = std::getenv("REPBASIS_KERNELS");
  if (forced != nullptr && std::string_view(forced) == "scalar") return kScalar;
  if (const KernelTable* fast = avx2()) return *fast;
  return kScalar;
}

}  // namespace

const KernelTable& scalar() { return kScalar; }

const KernelTable* avx2() {
#ifdef REPBASIS_HAVE_AVX2_KERNELS
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace repbasis::kernels
