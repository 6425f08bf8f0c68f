// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "coxcert/kernels.hpp"

namespace coxcert::kernels::detail {

void compose_avx2(const std::int16_t* outer, const std::int16_t* inner, std::int16_t* out, std::size_t n) {
  const __m256i low16 = _mm256_set1_epi32(0xFFFF);
  const auto* base = reinterpret_cast<const int*>(outer);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i idx16 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + i));
    const __m256i lo = _mm256_cvtepi16_epi32(_mm256_castsi256_si128(idx16));
    const __m256i hi = _mm256_cvtepi16_epi32(_mm256_extracti128_si256(idx16, 1));
    // 32-bit gathers at byte offset 2*idx; the upper half belongs to the
    // neighbouring entry and is masked off.
    const __m256i g_lo = _mm256_and_si256(_mm256_i32gather_epi32(base, lo, 2), low16);
    const __m256i g_hi = _mm256_and_si256(_mm256_i32gather_epi32(base, hi, 2), low16);
    const __m256i packed = _mm256_permute4x64_epi64(_mm256_packus_epi32(g_lo, g_hi), 0xD8);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), packed);
  }
  for (; i < n; ++i) out[i] = outer[inner[i]];
}

std::size_t count_below_avx2(const std::int16_t* values, std::size_t n, std::int16_t threshold) {
  const __m256i t = _mm256_set1_epi16(threshold);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpgt_epi16(t, v)));
    count += static_cast<std::size_t>(__builtin_popcount(mask)) / 2;
  }
  for (; i < n; ++i) count += values[i] < threshold ? 1 : 0;
  return count;
}

}  // namespace coxcert::kernels::detail
