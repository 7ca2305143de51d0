#pragma once

#include <cmath>
#include <cstdint>

namespace ramsey {

/// Largest r with r*r <= x.
inline std::uint64_t isqrt_floor(std::uint64_t x) {
  if (x < 2) return x;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

/// Smallest c with c*c >= x.
inline std::uint64_t isqrt_ceil(std::uint64_t x) {
  const std::uint64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

/// ceil(k * sqrt(2m)), the recurring size margin, without floating point.
inline std::uint64_t ceil_k_sqrt_2m(std::uint64_t k, std::uint64_t m) {
  return isqrt_ceil(k * k * 2 * m);
}

}  // namespace ramsey
