#pragma once

// Exact wide-integer arithmetic. Every inequality in this project is rational,
// so all comparisons are done on cross-multiplied 128-bit integers; nothing is
// ever rounded through a float.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hfam {

using u128 = unsigned __int128;
using i128 = __int128;

// Throw std::overflow_error instead of wrapping.
u128 checked_add(u128 a, u128 b);
u128 checked_mul(u128 a, u128 b);

// C(n, k), exact. Throws std::overflow_error past 128 bits.
u128 binomial(std::uint64_t n, std::uint64_t k);

// 2^e. Throws std::overflow_error for e > 127.
u128 pow2(unsigned e);

bool fits_u64(u128 v);

std::string to_decimal(u128 v);
std::string to_decimal(i128 v);

// Parameter triple (r, s, t), 1 <= t <= r <= s, with the ground threshold
//   value = r + (s - t) * max{ 2*C(s,t), 2^r * (r-t) * C(r,t) + 1 }.
struct Threshold {
  int r = 0;
  int s = 0;
  int t = 0;
  u128 value = 0;
};

Threshold c_threshold(int r, int s, int t);

}  // namespace hfam
