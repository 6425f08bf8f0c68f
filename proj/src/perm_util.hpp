#pragma once

// Padded raw root permutations for hot loops that should not pay for
// WeylElt's cached reduced word.

#include <algorithm>
#include <span>
#include <vector>

#include "coxcert/kernels.hpp"
#include "coxcert/rootsys.hpp"

namespace coxcert::detail {

using Perm = std::vector<RootIndex>;

inline Perm padded_identity(int n) {
  Perm p(n + kernels::kPermPad, 0);
  for (int i = 0; i < n; ++i) p[i] = static_cast<RootIndex>(i);
  return p;
}

inline Perm padded_copy(std::span<const RootIndex> src) {
  Perm p(src.size() + kernels::kPermPad, 0);
  std::copy(src.begin(), src.end(), p.begin());
  return p;
}

// outer o inner
inline Perm compose(const Perm& outer, const Perm& inner, int n) {
  Perm out(n + kernels::kPermPad, 0);
  kernels::compose(std::span<const RootIndex>(outer.data(), n), std::span<const RootIndex>(inner.data(), n),
                   std::span<RootIndex>(out.data(), n));
  return out;
}

inline Perm inverse_perm(const Perm& p, int n) {
  Perm out(n + kernels::kPermPad, 0);
  for (int i = 0; i < n; ++i) out[p[i]] = static_cast<RootIndex>(i);
  return out;
}

inline bool same_perm(const Perm& a, std::span<const RootIndex> b) {
  return std::equal(b.begin(), b.end(), a.begin());
}

}  // namespace coxcert::detail
