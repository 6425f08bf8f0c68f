#pragma once

// Inner loops over root permutations. A scalar reference implementation is
// always built; an AVX2 variant is compiled in a separate translation unit
// and chosen at runtime when the CPU supports it. COXCERT_KERNELS=scalar
// forces the reference path.
//
// Permutation buffers handed to compose() must be readable for kPermPad
// entries past their logical end (the AVX2 gather reads 32-bit words).

#include <cstddef>
#include <cstdint>
#include <span>

namespace coxcert::kernels {

inline constexpr std::size_t kPermPad = 16;

/// out[i] = outer[inner[i]] for i < inner.size().
using ComposeFn = void (*)(const std::int16_t* outer, const std::int16_t* inner, std::int16_t* out,
                           std::size_t n);
/// Number of i < n with values[i] < threshold.
using CountBelowFn = std::size_t (*)(const std::int16_t* values, std::size_t n, std::int16_t threshold);

struct KernelTable {
  const char* name;
  ComposeFn compose;
  CountBelowFn count_below;
};

const KernelTable& scalar_table();
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();
/// The table used by the library.
const KernelTable& active();

inline void compose(std::span<const std::int16_t> outer, std::span<const std::int16_t> inner,
                    std::span<std::int16_t> out) {
  active().compose(outer.data(), inner.data(), out.data(), inner.size());
}

inline std::size_t count_below(std::span<const std::int16_t> values, std::int16_t threshold) {
  return active().count_below(values.data(), values.size(), threshold);
}

}  // namespace coxcert::kernels
