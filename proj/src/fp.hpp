#ifndef TIGHTCLOSE_FP_HPP
#define TIGHTCLOSE_FP_HPP

#include <cstdint>

#include "intmath.hpp"

namespace tightclose {

// The prime field F_p. Elements are canonical representatives in [0, p).
class PrimeField {
public:
  explicit PrimeField(u64 p) : p_(p) {
    if (!is_prime_u64(p)) fail(Errc::invalid_argument, "characteristic must be prime");
  }

  u64 p() const { return p_; }

  u64 reduce(u64 v) const { return v % p_; }

  // Canonical representative of a signed integer.
  u64 from_int(i64 v) const {
    i64 r = v % i64(p_);
    if (r < 0) r += i64(p_);
    return u64(r);
  }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;  // a, b < p <= 2^63 would be needed for no-overflow; use subtraction form
    if (s >= p_ || s < a) s -= p_;
    return s;
  }

  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }

  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }

  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p_); }

  u64 pow(u64 a, u64 e) const { return powmod(a, e, p_); }

  u64 inv(u64 a) const {
    if (a == 0) fail(Errc::invalid_argument, "division by zero in F_p");
    // extended Euclid on (a, p)
    i64 t = 0, new_t = 1;
    i64 r = i64(p_), new_r = i64(a % p_);
    while (new_r != 0) {
      i64 q = r / new_r;
      i64 tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
  u64 p_;
};

}  // namespace tightclose

#endif
