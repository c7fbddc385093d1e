#include "quotient.hpp"

#include <algorithm>

namespace tightclose {

namespace {

// x^N + y^N + z^N in the given three-variable ring.
bool is_diagonal_form(const Polynomial& f, u64 n) {
  if (f.ring().nvars() != 3 || f.term_count() != 3) return false;
  std::vector<bool> seen(3, false);
  for (const auto& t : f.terms()) {
    if (t.coeff != 1) return false;
    std::size_t support = 0, which = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (t.monomial.exponent(i) != 0) {
        ++support;
        which = i;
      }
    if (support != 1 || t.monomial.exponent(which) != n || seen[which]) return false;
    seen[which] = true;
  }
  return true;
}

}  // namespace

QuotientRing::QuotientRing(PolyRing ambient, Ideal modulus, RingKind kind,
                           u64 hypersurface_exponent)
    : ambient_(std::move(ambient)),
      modulus_(std::move(modulus)),
      kind_(kind),
      hypersurface_n_(hypersurface_exponent) {
  if (modulus_.ring() != ambient_)
    fail(Errc::invalid_argument, "modulus lives in a different ring");
  if (kind_ == RingKind::diagonal_hypersurface) {
    if (hypersurface_n_ < 2)
      fail(Errc::invalid_argument, "diagonal hypersurface needs exponent N >= 2");
    if (hypersurface_n_ % ambient_.characteristic() == 0)
      fail(Errc::invalid_argument, "diagonal hypersurface requires p not dividing N");
    if (modulus_.gens().size() != 1 || !is_diagonal_form(modulus_.gens()[0], hypersurface_n_))
      fail(Errc::invalid_argument, "diagonal hypersurface modulus must be x^N+y^N+z^N");
  }
  if (kind_ == RingKind::stanley_reisner) {
    for (const Polynomial& g : modulus_.gens()) {
      if (!g.is_monomial()) fail(Errc::invalid_argument, "Stanley-Reisner modulus must be monomial");
      for (u64 e : g.terms()[0].monomial.exponents())
        if (e > 1) fail(Errc::invalid_argument, "Stanley-Reisner modulus must be squarefree");
    }
  }
}

Ideal QuotientRing::maximal_ideal() const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ambient_.nvars(); ++i)
    gens.push_back(Polynomial::variable(ambient_, i));
  return Ideal(ambient_, std::move(gens));
}

LengthValue QuotientRing::length_of_quotient(const Ideal& j) const {
  if (j.ring() != ambient_) fail(Errc::invalid_argument, "ideal lives in a different ring");
  Ideal full = sum(modulus_, j);
  if (full.is_zero_ideal()) return LengthValue::infinite();
  std::vector<Monomial> lead = full.leading_monomials();
  if (lead.size() == 1 && lead[0].is_one()) return LengthValue::of(0);

  const std::size_t nv = ambient_.nvars();
  // per-variable staircase bounds: the minimal pure power of each variable
  std::vector<u64> bound(nv, 0);
  std::vector<bool> bounded(nv, false);
  for (const Monomial& m : lead) {
    std::size_t support = 0, which = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (m.exponent(i) != 0) {
        ++support;
        which = i;
      }
    if (support == 1) {
      u64 e = m.exponent(which);
      if (!bounded[which] || e < bound[which]) bound[which] = e;
      bounded[which] = true;
    }
  }
  if (!std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; }))
    return LengthValue::infinite();

  u64 box = 1;
  for (u64 b : bound) box = checked_mul(box, b);
  if (box > 100'000'000ull) fail(Errc::overflow, "staircase enumeration too large");

  // walk the box under the staircase and count standard monomials
  u64 count = 0;
  std::vector<u64> e(nv, 0);
  for (;;) {
    Monomial m = Monomial::from_exponents(e);
    bool standard = std::none_of(lead.begin(), lead.end(),
                                 [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
    std::size_t i = 0;
    while (i < nv) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == nv) break;
  }
  return LengthValue::of(count);
}

u64 QuotientRing::graded_dim(u64 n) const {
  for (const Polynomial& g : modulus_.gens())
    if (!g.is_homogeneous())
      fail(Errc::invalid_argument, "graded dimension needs a homogeneous modulus");
  std::vector<Monomial> lead =
      modulus_.is_zero_ideal() ? std::vector<Monomial>{} : modulus_.leading_monomials();

  const std::size_t nv = ambient_.nvars();
  u64 count = 0;
  // enumerate exponent vectors of total degree n
  std::vector<u64> e(nv, 0);
  auto standard = [&](const Monomial& m) {
    return std::none_of(lead.begin(), lead.end(),
                        [&](const Monomial& l) { return l.divides(m); });
  };
  // recursive composition walk
  auto rec = [&](auto&& self, std::size_t i, u64 remaining) -> void {
    if (i + 1 == nv) {
      e[i] = remaining;
      if (standard(Monomial::from_exponents(e))) ++count;
      e[i] = 0;
      return;
    }
    for (u64 v = 0; v <= remaining; ++v) {
      e[i] = v;
      self(self, i + 1, remaining - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, n);
  return count;
}

std::size_t QuotientRing::krull_dimension() const {
  if (modulus_.is_zero_ideal()) return ambient_.nvars();
  std::vector<Monomial> lead = modulus_.leading_monomials();
  if (lead.size() == 1 && lead[0].is_one()) return 0;  // unit modulus: zero ring
  const std::size_t nv = ambient_.nvars();
  if (nv > 20) fail(Errc::unsupported, "dimension computation limited to 20 variables");
  std::vector<u64> support;
  support.reserve(lead.size());
  for (const Monomial& m : lead) {
    u64 mask = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (m.exponent(i) != 0) mask |= u64(1) << i;
    support.push_back(mask);
  }
  std::size_t best = 0;
  for (u64 s = 0; s < (u64(1) << nv); ++s) {
    bool independent = std::none_of(support.begin(), support.end(),
                                    [&](u64 m) { return (m & ~s) == 0; });
    if (independent) best = std::max<std::size_t>(best, std::size_t(__builtin_popcountll(s)));
  }
  return best;
}

}  // namespace tightclose
