#include "ideal.hpp"

#include <algorithm>

namespace tightclose {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.ring() != ring_) fail(Errc::invalid_argument, "generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->bases.find(ord);
  if (it != cache_->bases.end()) return it->second;
  std::vector<Polynomial> gb;
  if (!gens_.empty()) gb = buchberger(gens_, ord);
  return cache_->bases.emplace(ord, std::move(gb)).first->second;
}

std::vector<Monomial> Ideal::leading_monomials(const MonomialOrder& ord) const {
  const auto& gb = groebner_basis(ord);
  std::vector<Monomial> lms;
  lms.reserve(gb.size());
  for (const Polynomial& g : gb) lms.push_back(g.leading_monomial(ord));
  return minimalize_monomials(std::move(lms), ord);
}

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

namespace {
void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) fail(Errc::invalid_argument, "ideals live in different rings");
}
}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.gens();
  for (const Polynomial& g : b.gens()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) {
      Polynomial h = f * g;
      bool dup = std::any_of(gens.begin(), gens.end(),
                             [&](const Polynomial& x) { return x == h; });
      if (!dup) gens.push_back(std::move(h));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& a, u64 n) {
  if (n == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (u64 k = 1; k < n; ++k) r = product(r, a);
  return r;
}

Ideal bracket_power(const Ideal& a, u64 q) {
  u64 p = a.ring().characteristic();
  u64 t = q;
  while (t > 1 && t % p == 0) t /= p;
  if (t != 1) fail(Errc::unsupported, "bracket power exponent must be a power of p");
  std::vector<Polynomial> gens;
  gens.reserve(a.gens().size());
  for (const Polynomial& g : a.gens()) gens.push_back(g.frobenius_power(q));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const PolyRing& ring = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(ring);

  // extended ring with the auxiliary variable first
  std::string aux = "t";
  while (ring.variable_index(aux)) aux += "_";
  std::vector<std::string> vars;
  vars.push_back(aux);
  for (const auto& v : ring.variables()) vars.push_back(v);
  PolyRing ext(ring.field(), std::move(vars));

  auto lift = [&](const Polynomial& f) {
    std::vector<std::pair<Monomial, u64>> terms;
    for (const auto& t : f.terms()) {
      std::vector<u64> e;
      e.reserve(ext.nvars());
      e.push_back(0);
      for (u64 v : t.monomial.exponents()) e.push_back(v);
      terms.emplace_back(Monomial::from_exponents(std::move(e)), t.coeff);
    }
    return Polynomial::from_terms(ext, std::move(terms));
  };

  Polynomial t_var = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t_var;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens()) gens.push_back(t_var * lift(f));
  for (const Polynomial& g : b.gens()) gens.push_back(one_minus_t * lift(g));

  std::vector<Polynomial> gb = buchberger(gens, MonomialOrder::block(1));
  std::vector<Polynomial> contracted;
  for (const Polynomial& g : gb) {
    bool uses_aux = std::any_of(g.terms().begin(), g.terms().end(),
                                [](const auto& t) { return t.monomial.exponent(0) != 0; });
    if (uses_aux) continue;
    std::vector<std::pair<Monomial, u64>> terms;
    for (const auto& t : g.terms()) {
      std::vector<u64> e(t.monomial.exponents().begin() + 1, t.monomial.exponents().end());
      terms.emplace_back(Monomial::from_exponents(std::move(e)), t.coeff);
    }
    contracted.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(contracted));
}

bool contains_poly(const Ideal& ideal, const Polynomial& f, const MonomialOrder& ord) {
  if (f.ring() != ideal.ring()) fail(Errc::invalid_argument, "polynomial from a different ring");
  if (f.is_zero()) return true;
  const auto& gb = ideal.groebner_basis(ord);
  if (gb.empty()) return false;  // zero ideal
  return normal_form(f, gb, ord).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  check_same_ring(outer, inner);
  return std::all_of(inner.gens().begin(), inner.gens().end(),
                     [&](const Polynomial& g) { return contains_poly(outer, g); });
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  // reduced Groebner bases are canonical: equality of the bases is equality of
  // the ideals
  return a.groebner_basis() == b.groebner_basis();
}

Ideal interreduce(const Ideal& a) { return Ideal(a.ring(), a.groebner_basis()); }

Ideal with_modulus(const Ideal& a, const Ideal& modulus) { return sum(a, modulus); }

bool equals_mod(const Ideal& a, const Ideal& b, const Ideal& modulus) {
  return ideal_equals(with_modulus(a, modulus), with_modulus(b, modulus));
}

bool contains_mod(const Ideal& outer, const Ideal& inner, const Ideal& modulus) {
  return ideal_contains(with_modulus(outer, modulus), inner);
}

bool contains_poly_mod(const Ideal& a, const Polynomial& f, const Ideal& modulus) {
  return contains_poly(with_modulus(a, modulus), f);
}

Ideal interreduce_mod(const Ideal& a, const Ideal& modulus) {
  return interreduce(with_modulus(a, modulus));
}

Ideal intersect_mod(const Ideal& a, const Ideal& b, const Ideal& modulus) {
  return intersect(with_modulus(a, modulus), with_modulus(b, modulus));
}

ReductionResult is_reduction(const Ideal& j, const Ideal& i, u64 n_max, const Ideal* modulus) {
  check_same_ring(j, i);
  Ideal mod = modulus ? *modulus : Ideal::zero(i.ring());
  if (!contains_mod(i, j, mod))
    fail(Errc::invalid_argument, "is_reduction requires J to be contained in I");

  Ideal i_pow = Ideal::unit(i.ring());  // I^n, interreduced modulo the modulus
  for (u64 n = 0; n <= n_max; ++n) {
    Ideal next = interreduce_mod(product(i_pow, i), mod);  // I^{n+1}
    Ideal j_part = product(j, i_pow);                      // J I^n
    if (equals_mod(j_part, next, mod)) return {true, n};
    i_pow = next;
  }
  return {false, n_max};
}

}  // namespace tightclose
