#include "coxcert/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace coxcert::kernels {

#if defined(COXCERT_HAVE_AVX2)
namespace detail {
void compose_avx2(const std::int16_t* outer, const std::int16_t* inner, std::int16_t* out, std::size_t n);
std::size_t count_below_avx2(const std::int16_t* values, std::size_t n, std::int16_t threshold);
}  // namespace detail
#endif

const KernelTable* avx2_table() {
#if defined(COXCERT_HAVE_AVX2)
  static const KernelTable table{"avx2", &detail::compose_avx2, &detail::count_below_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* env = std::getenv("COXCERT_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace coxcert::kernels
