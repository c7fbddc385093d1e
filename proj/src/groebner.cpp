#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tightclose {

namespace {

void check_inputs(std::span<const Polynomial> polys) {
  if (polys.empty()) fail(Errc::invalid_argument, "empty generator list");
  for (std::size_t i = 1; i < polys.size(); ++i) check_same_ring(polys[0], polys[i]);
}

using WorkPoly = std::map<Monomial, u64, MonomialGreater>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& ord) {
  WorkPoly w{MonomialGreater{ord}};
  for (const auto& t : f.terms()) w.emplace(t.monomial, t.coeff);
  return w;
}

Polynomial from_work(const PolyRing& ring, const WorkPoly& w) {
  std::vector<std::pair<Monomial, u64>> terms(w.begin(), w.end());
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  check_same_ring(f, g);
  if (f.is_zero() || g.is_zero())
    fail(Errc::invalid_argument, "S-polynomial of the zero polynomial");
  const PrimeField& F = f.ring().field();
  const auto& ltf = f.leading_term(ord);
  const auto& ltg = g.leading_term(ord);
  Monomial l = Monomial::lcm(ltf.monomial, ltg.monomial);
  Polynomial a = f.times_term(l.div(ltf.monomial), F.inv(ltf.coeff));
  Polynomial b = g.times_term(l.div(ltg.monomial), F.inv(ltg.coeff));
  return a - b;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
  check_inputs(basis);
  check_same_ring(f, basis[0]);
  for (const Polynomial& g : basis)
    if (g.is_zero()) fail(Errc::invalid_argument, "division by a zero polynomial");

  const PrimeField& F = f.ring().field();
  struct Divisor {
    const Polynomial* poly;
    const Monomial* lm;
    u64 lc_inv;
  };
  std::vector<Divisor> divisors;
  divisors.reserve(basis.size());
  for (const Polynomial& g : basis) {
    const auto& lt = g.leading_term(ord);
    divisors.push_back({&g, &lt.monomial, F.inv(lt.coeff)});
  }

  WorkPoly work = to_work(f, ord);
  std::vector<std::pair<Monomial, u64>> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    Monomial m = top->first;
    u64 c = top->second;
    work.erase(top);
    const Divisor* hit = nullptr;
    for (const Divisor& d : divisors)
      if (d.lm->divides(m)) {
        hit = &d;
        break;
      }
    if (!hit) {
      remainder.emplace_back(std::move(m), c);
      continue;
    }
    // cancel the whole term: work -= (c/lc) * (m/lm) * g; the leading term of
    // the multiple equals (m, c) and was already removed above.
    u64 factor = F.mul(c, hit->lc_inv);
    Monomial shift = m.div(*hit->lm);
    bool skipped_leading = false;
    for (const auto& t : hit->poly->terms()) {
      if (!skipped_leading && t.monomial == *hit->lm) {
        skipped_leading = true;
        continue;
      }
      Monomial key = t.monomial.mul(shift);
      u64 delta = F.mul(factor, t.coeff);
      auto [it, inserted] = work.emplace(std::move(key), F.neg(delta));
      if (!inserted) {
        it->second = F.sub(it->second, delta);
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

namespace {

struct PairEntry {
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    int c = ord->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& ord) {
  // minimalize: drop elements whose leading monomial is divisible by another's
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    const Monomial& mi = basis[i].leading_monomial(ord);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& mj = basis[j].leading_monomial(ord);
      if (mj.divides(mi) && (mj != mi || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i].monic(ord));

  // tail-reduce each element against the others; leading terms are pairwise
  // indivisible so they survive reduction
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    if (others.empty()) {
      reduced.push_back(minimal[i]);
    } else {
      reduced.push_back(normal_form(minimal[i], others, ord).monic(ord));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return reduced;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  check_inputs(gens);
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) fail(Errc::invalid_argument, "all generators are zero");

  std::set<PairEntry, PairLess> queue{PairLess{&ord}};
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    queue.insert({Monomial::lcm(basis[i].leading_monomial(ord), basis[j].leading_monomial(ord)),
                  std::min(i, j), std::max(i, j)});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    PairEntry pr = *queue.begin();
    queue.erase(queue.begin());
    done.insert({pr.i, pr.j});
    const Monomial& lmi = basis[pr.i].leading_monomial(ord);
    const Monomial& lmj = basis[pr.j].leading_monomial(ord);
    // product criterion
    if (lmi.coprime(lmj)) continue;
    // chain criterion: some lm_k divides the lcm and both subpairs were treated
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial(ord).divides(pr.lcm)) continue;
      auto ik = std::minmax(pr.i, k);
      auto jk = std::minmax(pr.j, k);
      if (done.count({ik.first, ik.second}) && done.count({jk.first, jk.second})) skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], ord);
    if (s.is_zero()) continue;
    Polynomial r = normal_form(s, basis, ord);
    if (r.is_zero()) continue;
    basis.push_back(r);
    std::size_t t = basis.size() - 1;
    for (std::size_t k = 0; k < t; ++k) push_pair(k, t);
  }
  return reduce_basis(std::move(basis), ord);
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials,
                                           const MonomialOrder& ord) {
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monomials.size() && !redundant; ++j) {
      if (i == j) continue;
      if (monomials[j].divides(monomials[i]) && (monomials[j] != monomials[i] || j < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(monomials[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return minimal;
}

std::vector<Monomial> initial_ideal(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  std::vector<Polynomial> gb = buchberger(gens, ord);
  std::vector<Monomial> lms;
  lms.reserve(gb.size());
  for (const Polynomial& g : gb) lms.push_back(g.leading_monomial(ord));
  return minimalize_monomials(std::move(lms), ord);
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& ord) {
  check_inputs(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j], ord);
      if (s.is_zero()) continue;
      if (!normal_form(s, basis, ord).is_zero()) return false;
    }
  return true;
}

}  // namespace tightclose
