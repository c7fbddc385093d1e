#ifndef TIGHTCLOSE_IDEAL_HPP
#define TIGHTCLOSE_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>

#include "groebner.hpp"

namespace tightclose {

// An ideal given by generators, with reduced Groebner bases cached per order.
// The zero ideal is represented by an empty generator list. Copies share the
// cache; the cache is synchronized for concurrent use.
class Ideal {
public:
  Ideal(PolyRing ring, std::vector<Polynomial> gens);

  static Ideal zero(const PolyRing& ring) { return Ideal(ring, {}); }
  static Ideal unit(const PolyRing& ring) {
    return Ideal(ring, {Polynomial::constant(ring, 1)});
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  // Reduced Groebner basis under ord; empty for the zero ideal.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  std::vector<Monomial> leading_monomials(
      const MonomialOrder& ord = MonomialOrder::grevlex()) const;

  bool is_unit_ideal() const;

private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;

  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::vector<Polynomial>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, u64 n);

// Frobenius bracket power: ideal generated by q-th powers of the generators;
// q must be a power of the ring characteristic (q = 1 gives the ideal back).
Ideal bracket_power(const Ideal& a, u64 q);

// Intersection by single-auxiliary-variable elimination: eliminate t from
// t*a + (1-t)*b with a block order, contract to the original ring.
Ideal intersect(const Ideal& a, const Ideal& b);

bool contains_poly(const Ideal& ideal, const Polynomial& f,
                   const MonomialOrder& ord = MonomialOrder::grevlex());
bool ideal_contains(const Ideal& outer, const Ideal& inner);
bool ideal_equals(const Ideal& a, const Ideal& b);

// Replaces the generators by the reduced grevlex Groebner basis.
Ideal interreduce(const Ideal& a);

struct ReductionResult {
  bool reduced;  // true: J I^n = I^{n+1} first holds at n; false: no n <= n_max works
  u64 n;         // witnessing n, or the tested n_max
};

// Smallest n <= n_max with J I^n = I^{n+1}; requires J subset of I. When a
// modulus is supplied all ideal comparisons happen in the quotient by it.
ReductionResult is_reduction(const Ideal& j, const Ideal& i, u64 n_max,
                             const Ideal* modulus = nullptr);

// Quotient-aware helpers: computations on lifted ideals with the modulus
// adjoined at comparison time.
Ideal with_modulus(const Ideal& a, const Ideal& modulus);
bool equals_mod(const Ideal& a, const Ideal& b, const Ideal& modulus);
bool contains_mod(const Ideal& outer, const Ideal& inner, const Ideal& modulus);
bool contains_poly_mod(const Ideal& a, const Polynomial& f, const Ideal& modulus);
Ideal interreduce_mod(const Ideal& a, const Ideal& modulus);
Ideal intersect_mod(const Ideal& a, const Ideal& b, const Ideal& modulus);

}  // namespace tightclose

#endif
