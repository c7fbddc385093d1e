#include "poly.hpp"

#include <algorithm>
#include <map>

namespace tightclose {

namespace {
const MonomialOrder kCanonical = MonomialOrder::grevlex();
}

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring()) fail(Errc::invalid_argument, "polynomials live in different rings");
}

Polynomial Polynomial::constant(const PolyRing& ring, u64 c) {
  return term(ring, Monomial(ring.nvars()), c);
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t index) {
  if (index >= ring.nvars()) fail(Errc::invalid_argument, "variable index out of range");
  std::vector<u64> e(ring.nvars(), 0);
  e[index] = 1;
  return term(ring, Monomial::from_exponents(std::move(e)), 1);
}

Polynomial Polynomial::term(const PolyRing& ring, Monomial m, u64 c) {
  if (m.nvars() != ring.nvars())
    fail(Errc::invalid_argument, "monomial does not match the ring's variable count");
  Polynomial f(ring);
  u64 cc = ring.field().reduce(c);
  if (cc != 0) f.terms_.push_back({std::move(m), cc});
  return f;
}

Polynomial Polynomial::from_terms(const PolyRing& ring,
                                  std::vector<std::pair<Monomial, u64>> terms) {
  std::map<Monomial, u64, MonomialGreater> acc{MonomialGreater{kCanonical}};
  const PrimeField& F = ring.field();
  for (auto& [m, c] : terms) {
    if (m.nvars() != ring.nvars())
      fail(Errc::invalid_argument, "monomial does not match the ring's variable count");
    u64 cc = F.reduce(c);
    if (cc == 0) continue;
    auto [it, inserted] = acc.emplace(std::move(m), cc);
    if (!inserted) {
      it->second = F.add(it->second, cc);
      if (it->second == 0) acc.erase(it);
    }
  }
  Polynomial f(ring);
  f.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) f.terms_.push_back({m, c});
  return f;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) fail(Errc::invalid_argument, "the zero polynomial has no leading term");
  if (ord == kCanonical) return terms_.front();
  const Term* best = &terms_.front();
  for (const Term& t : terms_)
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

u64 Polynomial::total_degree() const {
  u64 d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  u64 d = terms_[0].monomial.total_degree();
  for (const Term& t : terms_)
    if (t.monomial.total_degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_same_ring(*this, g);
  // merge two canonically sorted term lists
  Polynomial r(ring_);
  const PrimeField& F = ring_.field();
  std::size_t i = 0, j = 0;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = kCanonical.compare(terms_[i].monomial, g.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      u64 s = F.add(terms_[i].coeff, g.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].monomial, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  const PrimeField& F = ring_.field();
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.monomial, F.neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(*this, g);
  std::vector<std::pair<Monomial, u64>> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  const PrimeField& F = ring_.field();
  for (const Term& a : terms_)
    for (const Term& b : g.terms_)
      acc.emplace_back(a.monomial.mul(b.monomial), F.mul(a.coeff, b.coeff));
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::times_term(const Monomial& m, u64 c) const {
  const PrimeField& F = ring_.field();
  u64 cc = F.reduce(c);
  Polynomial r(ring_);
  if (cc == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.monomial.mul(m), F.mul(t.coeff, cc)});
  // multiplication by a fixed monomial preserves the canonical sort
  return r;
}

Polynomial Polynomial::scaled(u64 c) const { return times_term(Monomial(ring_.nvars()), c); }

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (terms_.empty()) return *this;
  u64 lc = leading_term(ord).coeff;
  if (lc == 1) return *this;
  return scaled(ring_.field().inv(lc));
}

Polynomial Polynomial::frobenius_power(u64 q) const {
  u64 p = ring_.characteristic();
  u64 t = q;
  while (t > 1) {
    if (t % p != 0) fail(Errc::unsupported, "Frobenius exponent must be a power of p");
    t /= p;
  }
  if (t != 1) fail(Errc::unsupported, "Frobenius exponent must be a power of p");
  // (sum c_i m_i)^q = sum c_i^q m_i^q, and c^q = c in F_p
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t2 : terms_) r.terms_.push_back({t2.monomial.pow(q), t2.coeff});
  // exponentiation by q preserves the canonical sort (grevlex scales)
  return r;
}

Polynomial Polynomial::pow(u64 n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_.nvars())
    fail(Errc::invalid_argument, "substitution needs one image per variable");
  for (const Polynomial& g : images) check_same_ring(*this, g);
  Polynomial acc = zero(ring_);
  for (const Term& t : terms_) {
    Polynomial prod = constant(ring_, t.coeff);
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      u64 e = t.monomial.exponent(i);
      if (e) prod = prod * images[i].pow(e);
    }
    acc = acc + prod;
  }
  return acc;
}

}  // namespace tightclose
