#include "filtration.hpp"

#include <algorithm>

namespace tightclose {

Filtration Filtration::adic(QuotientRing r, Ideal base) {
  return Filtration(std::move(r), std::move(base), Adic{});
}

Filtration Filtration::m_power(QuotientRing r, Ideal base, Ideal m) {
  return Filtration(std::move(r), std::move(base), MPower{std::move(m)});
}

Filtration Filtration::tight_diagonal(const DiagonalRing& d) {
  return Filtration(d.ring, d.param_ideal, TightDiagonal{d});
}

Filtration Filtration::explicit_list(QuotientRing r, Ideal base, std::vector<Ideal> ideals) {
  if (ideals.empty()) fail(Errc::invalid_argument, "explicit filtration needs at least one ideal");
  return Filtration(std::move(r), std::move(base), ExplicitList{std::move(ideals)});
}

std::string Filtration::rule_name() const {
  if (std::holds_alternative<Adic>(rule_)) return "adic";
  if (std::holds_alternative<MPower>(rule_)) return "m-power";
  if (std::holds_alternative<TightDiagonal>(rule_)) return "tight-diagonal";
  return "explicit";
}

Ideal Filtration::ideal_at(i64 n) const {
  if (n <= 0) return Ideal::unit(ring_.ambient());
  u64 un = u64(n);
  if (std::holds_alternative<Adic>(rule_)) return power(base_, un);
  if (const auto* m = std::get_if<MPower>(&rule_)) return power(m->m, un);
  if (const auto* t = std::get_if<TightDiagonal>(&rule_))
    return tight_closure_power_diagonal(t->d, un);
  const auto& list = std::get<ExplicitList>(rule_).ideals;
  if (un <= list.size()) return list[un - 1];
  // extension convention beyond the provided list: I_n = I^{n-k} I_k
  return product(power(base_, un - list.size()), list.back());
}

std::vector<u64> hilbert_values(const Filtration& f, i64 n_lo, i64 n_hi) {
  if (n_lo > n_hi) fail(Errc::invalid_argument, "empty sample range");
  std::vector<u64> values;
  values.reserve(std::size_t(n_hi - n_lo + 1));
  for (i64 n = n_lo; n <= n_hi; ++n) {
    LengthValue len = f.ring().length_of_quotient(f.ideal_at(n));
    if (!len.finite)
      fail(Errc::invalid_argument,
           "filtration is not m-primary: infinite length at n = " + std::to_string(n));
    values.push_back(len.value);
  }
  return values;
}

i64 evaluate_hilbert_polynomial(const HilbertCoefficients& c, i64 n) {
  i64 acc = 0;
  i64 d = i64(c.d);
  for (std::size_t i = 0; i < c.e.size(); ++i) {
    i64 term = c.e[i] * binomial(n + d - 1 - i64(i), d - i64(i));
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

namespace {

// Exact solve of the (d+1)x(d+1) system by Cramer's rule with fraction-free
// determinants; returns false when the solution is not integral.
bool solve_integer_system(std::vector<std::vector<i128>> a, std::vector<i128> rhs,
                          std::vector<i64>& out) {
  const std::size_t n = a.size();
  auto det = [n](std::vector<std::vector<i128>> m) -> i128 {
    i128 sign = 1;
    i128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t swap_row = k + 1;
        while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
        if (swap_row == n) return 0;
        std::swap(m[k], m[swap_row]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;  // Bareiss: exact
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  };

  i128 d0 = det(a);
  if (d0 == 0) return false;
  out.assign(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    auto m = a;
    for (std::size_t row = 0; row < n; ++row) m[row][col] = rhs[row];
    i128 di = det(m);
    if (di % d0 != 0) return false;
    out[col] = narrow_i64(di / d0);
  }
  return true;
}

bool fit_window(const std::vector<u64>& values, const std::vector<i64>& offsets, std::size_t d,
                std::size_t start, std::vector<i64>& out) {
  const std::size_t n = d + 1;
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  std::vector<i128> rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    i64 nn = offsets[start + r];
    for (std::size_t c = 0; c < n; ++c) {
      i64 b = binomial(nn + i64(d) - 1 - i64(c), i64(d) - i64(c));
      a[r][c] = (c % 2 == 0) ? i128(b) : -i128(b);
    }
    rhs[r] = i128(values[start + r]);
  }
  return solve_integer_system(std::move(a), std::move(rhs), out);
}

}  // namespace

HilbertCoefficients fit_hilbert_coefficients(const std::vector<u64>& values,
                                             const std::vector<i64>& offsets, std::size_t d) {
  if (values.size() != offsets.size())
    fail(Errc::invalid_argument, "values and offsets differ in length");
  if (values.size() < d + 3)
    fail(Errc::not_stable,
         "need at least d+3 samples (a d+1 window plus two validation points)");
  for (std::size_t i = 1; i < offsets.size(); ++i)
    if (offsets[i] != offsets[i - 1] + 1)
      fail(Errc::invalid_argument, "samples must be at consecutive arguments");

  for (std::size_t start = 0; start + d + 2 <= values.size() - 1; ++start) {
    std::vector<i64> e1, e2;
    if (!fit_window(values, offsets, d, start, e1)) continue;
    if (!fit_window(values, offsets, d, start + 1, e2)) continue;
    if (e1 != e2) continue;
    HilbertCoefficients c{d, e1, offsets[start]};
    if (c.e.empty() || c.e[0] <= 0) continue;  // e_0 > 0 for an m-primary filtration
    bool valid = true;
    for (std::size_t s = start; s < values.size() && valid; ++s)
      valid = evaluate_hilbert_polynomial(c, offsets[s]) == i64(values[s]);
    if (!valid) continue;
    return c;
  }
  fail(Errc::not_stable,
       "Hilbert samples do not stabilize on the given range; extend the sample window");
}

HiPResult hi_p_check(const Filtration& f, u64 p_cond, u64 n_max) {
  const QuotientRing& r = f.ring();
  const Ideal& base = f.base();
  Ideal i_fixed = f.ideal_at(i64(p_cond) + 1);  // I_{p+1}
  for (u64 n = p_cond; n <= n_max; ++n) {
    Ideal adic_part = power(base, n - p_cond);  // I^{n-p}
    Ideal lhs = r.intersect(f.ideal_at(i64(n) + 1), adic_part);
    Ideal rhs = product(i_fixed, adic_part);
    if (!r.ideal_equals(lhs, rhs)) return {false, n};
  }
  return {true, 0};
}

u64 filtration_reduction_number(const Filtration& f, u64 n_max) {
  const QuotientRing& r = f.ring();
  const Ideal& base = f.base();
  // find the largest n in [0, n_max] where base * I_n != I_{n+1}; r is n+1
  u64 result = 0;
  bool found = false;
  for (u64 n = n_max + 1; n-- > 0;) {
    Ideal lhs = product(base, f.ideal_at(i64(n)));
    if (!r.ideal_equals(lhs, f.ideal_at(i64(n) + 1))) {
      if (n == n_max)
        fail(Errc::not_stable,
             "no reduction within n_max = " + std::to_string(n_max) + "; extend the window");
      result = n + 1;
      found = true;
      break;
    }
  }
  if (!found) result = 0;
  return result;
}

HilbertCoefficients hsp_coefficients(const Filtration& f, u64 r) {
  const QuotientRing& ring = f.ring();
  const std::size_t d = ring.krull_dimension();
  auto length_of = [&](const Ideal& j) -> u64 {
    LengthValue v = ring.length_of_quotient(j);
    if (!v.finite) fail(Errc::invalid_argument, "infinite length in the coefficient formula");
    return v.value;
  };

  HilbertCoefficients c{d, std::vector<i64>(d + 1, 0), i64(r)};
  c.e[0] = i64(length_of(f.base()));

  // ell(I_{k+1} / I I_k) = ell(R / I I_k) - ell(R / I_{k+1}) for k < r
  std::vector<i64> steps;
  for (u64 k = 0; k < r; ++k) {
    Ideal i_ik = product(f.base(), f.ideal_at(i64(k)));
    i64 step = i64(length_of(i_ik)) - i64(length_of(f.ideal_at(i64(k) + 1)));
    steps.push_back(step);
  }
  for (std::size_t i = 1; i <= d; ++i) {
    i64 acc = 0;
    for (u64 k = (i >= 1 ? u64(i - 1) : 0); k < r; ++k)
      acc += binomial(i64(k), i64(i) - 1) * steps[k];
    c.e[i] = acc;
  }
  return c;
}

std::pair<i64, i64> binomial_expand(u64 d, u64 k, u64 n) {
  if (d < 1 || k < 1) fail(Errc::invalid_argument, "binomial identity needs d, k >= 1");
  i64 dd = i64(d), kk = i64(k), nn = i64(n);
  i64 lhs = binomial(nn + dd - kk - 1, dd - 1);
  i64 rhs = 0;
  for (i64 j = 1; j <= kk + 1; ++j) {
    i64 term = binomial(kk, j - 1) * binomial(nn + dd - j, dd - j);
    rhs += (j % 2 == 1) ? term : -term;
  }
  return {lhs, rhs};
}

bool huckaba_marley_bound(const Filtration& f, const HilbertCoefficients& c) {
  if (c.e.size() < 2) fail(Errc::invalid_argument, "need at least e_0 and e_1");
  LengthValue l1 = f.ring().length_of_quotient(f.ideal_at(1));
  if (!l1.finite) fail(Errc::invalid_argument, "ell(R/I_1) must be finite");
  return c.e[1] >= c.e[0] - i64(l1.value);
}

}  // namespace tightclose
