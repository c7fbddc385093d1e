#ifndef TIGHTCLOSE_INTMATH_HPP
#define TIGHTCLOSE_INTMATH_HPP

#include <cstdint>
#include <limits>

#include "error.hpp"

namespace tightclose {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "unsigned addition overflow");
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "unsigned multiplication overflow");
  return r;
}

inline u64 checked_pow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline i64 narrow_i64(i128 v) {
  if (v > i128(std::numeric_limits<i64>::max()) || v < i128(std::numeric_limits<i64>::min()))
    fail(Errc::overflow, "value does not fit in 64-bit signed integer");
  return static_cast<i64>(v);
}

// Binomial coefficient by the polynomial convention: C(a,b) = 0 for b < 0, and
// for b >= 0 it is a(a-1)...(a-b+1)/b!, evaluated for any integer a (may be
// negative or zero when a < b).
inline i64 binomial(i64 a, i64 b) {
  if (b < 0) return 0;
  i128 r = 1;
  for (i64 i = 0; i < b; ++i) {
    r *= i128(a - i);
    r /= i128(i + 1);  // exact: partial products are binomials scaled by integers
    if (r > i128(1) << 100 || r < -(i128(1) << 100)) fail(Errc::overflow, "binomial overflow");
  }
  return narrow_i64(r);
}

}  // namespace tightclose

#endif
