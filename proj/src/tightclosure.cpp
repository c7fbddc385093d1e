#include "tightclosure.hpp"

#include "filtration.hpp"
#include "parse.hpp"

namespace tightclose {

DiagonalRing make_diagonal_ring(u64 n, u64 p) {
  if (n < 2) fail(Errc::invalid_argument, "diagonal exponent N must be at least 2");
  PolyRing ambient(PrimeField(p), {"x", "y", "z"});
  Polynomial x = Polynomial::variable(ambient, 0);
  Polynomial y = Polynomial::variable(ambient, 1);
  Polynomial z = Polynomial::variable(ambient, 2);
  Polynomial f = x.pow(n) + y.pow(n) + z.pow(n);
  QuotientRing ring(ambient, Ideal(ambient, {f}), RingKind::diagonal_hypersurface, n);
  Ideal param(ambient, {y, z});
  Ideal max_ideal(ambient, {x, y, z});
  return DiagonalRing{n, p, std::move(ring), std::move(param), std::move(max_ideal), z.pow(n - 1)};
}

MembershipVerdict tight_membership(const DiagonalRing& d, const Polynomial& f, const Ideal& j,
                                   u64 e_min, u64 e_max) {
  if (e_min < 1 || e_min > e_max)
    fail(Errc::invalid_argument, "membership probe needs 1 <= e_min <= e_max");
  for (u64 e = e_min; e <= e_max; ++e) {
    u64 q = checked_pow(d.p, e);
    Ideal frobenius = bracket_power(j, q);
    Polynomial probe = d.test_element * f.frobenius_power(q);
    if (!d.ring.contains_poly(frobenius, probe)) return {false, e};
  }
  return {true, e_max};
}

Ideal tight_closure_power_diagonal(const DiagonalRing& d, u64 k) {
  if (k < 1) fail(Errc::invalid_argument, "tight closure closed form needs k >= 1");
  Ideal i_pow = power(d.param_ideal, k);
  if (d.n == 2) return d.ring.interreduce(i_pow);
  return d.ring.interreduce(sum(power(d.max_ideal, k + 1), i_pow));
}

ClosedFormReport verify_closed_form(const DiagonalRing& d, u64 k, u64 e_max) {
  if (k < 1) fail(Errc::invalid_argument, "closed form verification needs k >= 1");
  Ideal i_pow = power(d.param_ideal, k);
  Ideal closed = tight_closure_power_diagonal(d, k);

  ClosedFormReport report{k, e_max, {}, 0};
  const PolyRing& ambient = d.ring.ambient();
  for (u64 a = 0; a <= k + 1; ++a)
    for (u64 b = 0; a + b <= k + 1; ++b)
      for (u64 c = 0; a + b + c <= k + 1; ++c) {
        Monomial m = Monomial::from_exponents({a, b, c});
        Polynomial f = Polynomial::term(ambient, m, 1);
        bool expected = d.ring.contains_poly(closed, f);
        MembershipVerdict verdict = tight_membership(d, f, i_pow, 1, e_max);
        bool agree = verdict.member == expected;
        if (!agree) ++report.disagreements;
        report.probes.push_back({format_monomial(ambient, m), verdict, expected, agree});
      }
  return report;
}

u64 tight_reduction_number(const DiagonalRing& d, u64 k_max) {
  if (k_max < d.n - 1)
    fail(Errc::invalid_argument,
         "tight reduction number needs k_max >= N-1 to see the stable window");
  // closures[k] = (I^k)*, with (I^0)* = R
  std::vector<Ideal> closures;
  closures.push_back(Ideal::unit(d.ring.ambient()));
  for (u64 k = 1; k <= k_max; ++k) closures.push_back(tight_closure_power_diagonal(d, k));

  u64 r = 0;
  for (u64 k = k_max; k-- > 0;) {
    if (!d.ring.ideal_equals(product(d.param_ideal, closures[k]), closures[k + 1])) {
      r = k + 1;
      break;
    }
  }
  return r;
}

FRationalityResult f_rationality_probe(const DiagonalRing& d, u64 e_max) {
  const PolyRing& ambient = d.ring.ambient();
  Polynomial x = Polynomial::variable(ambient, 0);
  MembershipVerdict x_in_istar = tight_membership(d, x, d.param_ideal, 1, e_max);

  // cross-check against e_1^* of the tight filtration
  Filtration tight = Filtration::tight_diagonal(d);
  std::vector<i64> offsets;
  for (i64 n = 1; n <= 6; ++n) offsets.push_back(n);
  std::vector<u64> values = hilbert_values(tight, 1, 6);
  HilbertCoefficients fit = fit_hilbert_coefficients(values, offsets, d.ring.krull_dimension());
  i64 e1 = fit.e.size() > 1 ? fit.e[1] : 0;

  bool member = x_in_istar.member;
  if (member != (e1 != 0))
    fail(Errc::internal, "membership probe and e_1^* disagree on F-rationality");
  if (member) {
    return {false,
            "x lies in I* (probe member up to e=" + std::to_string(x_in_istar.e) + ")", e1};
  }
  return {true, "x not in I* (probe fails at e=" + std::to_string(x_in_istar.e) + ")", e1};
}

}  // namespace tightclose
