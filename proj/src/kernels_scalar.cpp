#include "coxcert/kernels.hpp"

namespace coxcert::kernels {
namespace {

void compose_scalar(const std::int16_t* outer, const std::int16_t* inner, std::int16_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = outer[inner[i]];
}

std::size_t count_below_scalar(const std::int16_t* values, std::size_t n, std::int16_t threshold) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += values[i] < threshold ? 1 : 0;
  return count;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &compose_scalar, &count_below_scalar};
  return table;
}

}  // namespace coxcert::kernels
