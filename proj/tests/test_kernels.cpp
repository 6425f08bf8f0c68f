#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "coxcert/kernels.hpp"

using namespace coxcert::kernels;

namespace {

std::vector<std::int16_t> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::int16_t> p(n + kPermPad, 0);
  std::iota(p.begin(), p.begin() + n, 0);
  std::shuffle(p.begin(), p.begin() + n, rng);
  return p;
}

}  // namespace

TEST_CASE("scalar compose and count") {
  const std::vector<std::int16_t> outer{2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  const std::vector<std::int16_t> inner{1, 2, 0};
  std::vector<std::int16_t> out(3);
  scalar_table().compose(outer.data(), inner.data(), out.data(), 3);
  CHECK(out == std::vector<std::int16_t>{0, 1, 2});
  CHECK(scalar_table().count_below(inner.data(), 3, 2) == 2);
}

TEST_CASE("active table is one of the compiled variants") {
  const KernelTable& t = active();
  CHECK((&t == &scalar_table() || &t == avx2_table()));
  MESSAGE("active kernels: " << t.name);
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const KernelTable* simd = avx2_table();
  if (simd == nullptr) {
    MESSAGE("AVX2 variant unavailable on this host; equivalence skipped");
    return;
  }
  std::mt19937 rng(20261015);
  // Sizes cover every root-system size up to E8 plus tails around the 16-lane stride.
  std::vector<std::size_t> sizes{1, 2, 6, 8, 12, 15, 16, 17, 31, 32, 33, 48, 72, 126, 240, 1000};
  for (std::size_t n : sizes) {
    CAPTURE(n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto outer = random_perm(n, rng);
      const auto inner = random_perm(n, rng);
      std::vector<std::int16_t> a(n), b(n);
      scalar_table().compose(outer.data(), inner.data(), a.data(), n);
      simd->compose(outer.data(), inner.data(), b.data(), n);
      CHECK(a == b);
      const auto threshold = static_cast<std::int16_t>(std::uniform_int_distribution<int>(0, static_cast<int>(n))(rng));
      CHECK(scalar_table().count_below(outer.data(), n, threshold) == simd->count_below(outer.data(), n, threshold));
    }
  }
}

TEST_CASE("count_below handles negative values and extremes") {
  std::vector<std::int16_t> v(40);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::int16_t>(static_cast<int>(i) * 997 - 20000);
  for (std::int16_t t : {std::int16_t(-32768), std::int16_t(-1), std::int16_t(0), std::int16_t(32767)}) {
    const std::size_t expect = static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](std::int16_t x) { return x < t; }));
    CHECK(scalar_table().count_below(v.data(), v.size(), t) == expect);
    if (const KernelTable* simd = avx2_table()) CHECK(simd->count_below(v.data(), v.size(), t) == expect);
  }
}
