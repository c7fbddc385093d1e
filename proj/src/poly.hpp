#ifndef TIGHTCLOSE_POLY_HPP
#define TIGHTCLOSE_POLY_HPP

#include <utility>
#include <vector>

#include "order.hpp"
#include "ring.hpp"

namespace tightclose {

// Exact multivariate polynomial over F_p. Terms are kept sorted descending
// under grevlex (canonical storage order); no zero coefficients are stored and
// the zero polynomial has no terms. Leading terms under other orders are found
// by scanning.
class Polynomial {
public:
  struct Term {
    Monomial monomial;
    u64 coeff;  // in [1, p)
    bool operator==(const Term& o) const = default;
  };

  static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }

  static Polynomial constant(const PolyRing& ring, u64 c);
  static Polynomial variable(const PolyRing& ring, std::size_t index);
  static Polynomial term(const PolyRing& ring, Monomial m, u64 c);

  // Normalizes: reduces coefficients mod p, merges duplicate monomials, drops
  // zeros, sorts canonically.
  static Polynomial from_terms(const PolyRing& ring, std::vector<std::pair<Monomial, u64>> terms);

  const PolyRing& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term(const MonomialOrder& ord) const;
  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).monomial;
  }

  u64 total_degree() const;  // degree of the zero polynomial is 0 by convention here
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  bool operator==(const Polynomial& g) const {
    return ring_ == g.ring_ && terms_ == g.terms_;
  }
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  // this * c * m
  Polynomial times_term(const Monomial& m, u64 c) const;
  Polynomial scaled(u64 c) const;
  Polynomial monic(const MonomialOrder& ord) const;

  // f^q for q a power of the characteristic: term-wise Frobenius.
  Polynomial frobenius_power(u64 q) const;

  // Repeated-squaring power for general exponents.
  Polynomial pow(u64 n) const;

  // Evaluate at images[i] substituted for variable i (all in the same ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

private:
  explicit Polynomial(const PolyRing& ring) : ring_(ring) {}

  PolyRing ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace tightclose

#endif
