#include "hfam/exact.hpp"

#include <algorithm>

namespace hfam {

namespace {
constexpr u128 kMaxU128 = ~u128{0};
}

u128 checked_add(u128 a, u128 b) {
  if (a > kMaxU128 - b) throw std::overflow_error("u128 add overflow");
  return a + b;
}

u128 checked_mul(u128 a, u128 b) {
  if (a == 0 || b == 0) return 0;
  if (a > kMaxU128 / b) throw std::overflow_error("u128 mul overflow");
  return a * b;
}

u128 binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = checked_mul(r, u128{n - k + i});
    r /= i;  // exact: r holds C(n-k+i, i) * i! / i! at each step
  }
  return r;
}

u128 pow2(unsigned e) {
  if (e > 127) throw std::overflow_error("2^e overflows 128 bits");
  return u128{1} << e;
}

bool fits_u64(u128 v) { return v <= u128{~std::uint64_t{0}}; }

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_decimal(i128 v) {
  if (v >= 0) return to_decimal(static_cast<u128>(v));
  return "-" + to_decimal(static_cast<u128>(-(v + 1)) + 1);
}

Threshold c_threshold(int r, int s, int t) {
  if (!(1 <= t && t <= r && r <= s))
    throw std::invalid_argument("c(r,s,t) requires 1 <= t <= r <= s");
  const u128 star_term = checked_mul(2, binomial(s, t));
  const u128 cube_term = checked_add(
      checked_mul(checked_mul(pow2(static_cast<unsigned>(r)), u128(r - t)),
                  binomial(r, t)),
      1);
  const u128 value = checked_add(
      u128(r), checked_mul(u128(s - t), std::max(star_term, cube_term)));
  return Threshold{r, s, t, value};
}

}  // namespace hfam
