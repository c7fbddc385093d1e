#ifndef TIGHTCLOSE_QUOTIENT_HPP
#define TIGHTCLOSE_QUOTIENT_HPP

#include "ideal.hpp"

namespace tightclose {

enum class RingKind { free_polynomial, diagonal_hypersurface, stanley_reisner };

// Length of an m-primary quotient, or Infinite when the quotient has positive
// dimension.
struct LengthValue {
  bool finite;
  u64 value;

  static LengthValue infinite() { return {false, 0}; }
  static LengthValue of(u64 v) { return {true, v}; }
  bool operator==(const LengthValue& o) const = default;
};

// Quotient ring R = k[x_1..x_n]/M for a (possibly zero) modulus M.
class QuotientRing {
public:
  QuotientRing(PolyRing ambient, Ideal modulus, RingKind kind = RingKind::free_polynomial,
               u64 hypersurface_exponent = 0);

  static QuotientRing free_ring(const PolyRing& ambient) {
    return QuotientRing(ambient, Ideal::zero(ambient));
  }

  const PolyRing& ambient() const { return ambient_; }
  const Ideal& modulus() const { return modulus_; }
  RingKind kind() const { return kind_; }
  u64 hypersurface_exponent() const { return hypersurface_n_; }

  // Number of standard monomials of modulus + J (the k-dimension of R/J).
  LengthValue length_of_quotient(const Ideal& j) const;

  // k-dimension of the degree-n graded piece of R; requires a homogeneous
  // modulus.
  u64 graded_dim(u64 n) const;

  // Krull dimension, via independent sets of the initial ideal of the modulus.
  std::size_t krull_dimension() const;

  // Quotient-level ideal comparisons on lifted ideals.
  bool ideal_equals(const Ideal& a, const Ideal& b) const { return equals_mod(a, b, modulus_); }
  bool ideal_contains(const Ideal& outer, const Ideal& inner) const {
    return contains_mod(outer, inner, modulus_);
  }
  bool contains_poly(const Ideal& a, const Polynomial& f) const {
    return contains_poly_mod(a, f, modulus_);
  }
  Ideal interreduce(const Ideal& a) const { return interreduce_mod(a, modulus_); }
  Ideal intersect(const Ideal& a, const Ideal& b) const {
    return intersect_mod(a, b, modulus_);
  }
  ReductionResult is_reduction(const Ideal& j, const Ideal& i, u64 n_max) const {
    return tightclose::is_reduction(j, i, n_max, &modulus_);
  }

  // The irrelevant maximal ideal (all variables).
  Ideal maximal_ideal() const;

private:
  PolyRing ambient_;
  Ideal modulus_;
  RingKind kind_;
  u64 hypersurface_n_;
};

}  // namespace tightclose

#endif
