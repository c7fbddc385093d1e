#ifndef TIGHTCLOSE_FILTRATION_HPP
#define TIGHTCLOSE_FILTRATION_HPP

#include <variant>

#include "tightclosure.hpp"

namespace tightclose {

// Degree-indexed family of ideals I_n with I_n = R for n <= 0. The rule
// decides I_n for n >= 1:
//   adic           I_n = I^n
//   m_power        I_n = m^n        (models the integral/tight closure
//                                    filtration when ov(I^n) = m^n)
//   tight_diagonal I_n = (I^n)*     (closed form in the diagonal ring)
//   explicit_list  I_1..I_k given;  I_n = I^{n-k} I_k beyond the list
class Filtration {
public:
  struct Adic {};
  struct MPower {
    Ideal m;
  };
  struct TightDiagonal {
    DiagonalRing d;
  };
  struct ExplicitList {
    std::vector<Ideal> ideals;
  };

  static Filtration adic(QuotientRing r, Ideal base);
  static Filtration m_power(QuotientRing r, Ideal base, Ideal m);
  static Filtration tight_diagonal(const DiagonalRing& d);
  static Filtration explicit_list(QuotientRing r, Ideal base, std::vector<Ideal> ideals);

  const QuotientRing& ring() const { return ring_; }
  const Ideal& base() const { return base_; }
  std::string rule_name() const;

  Ideal ideal_at(i64 n) const;

private:
  Filtration(QuotientRing r, Ideal base, std::variant<Adic, MPower, TightDiagonal, ExplicitList> rule)
      : ring_(std::move(r)), base_(std::move(base)), rule_(std::move(rule)) {}

  QuotientRing ring_;
  Ideal base_;
  std::variant<Adic, MPower, TightDiagonal, ExplicitList> rule_;
};

inline Ideal filtration_ideal(const Filtration& f, i64 n) { return f.ideal_at(n); }

// ell(R/I_n) for n in [n_lo, n_hi]; every length must be finite.
std::vector<u64> hilbert_values(const Filtration& f, i64 n_lo, i64 n_hi);

// Integer coefficients of the Hilbert polynomial in the binomial basis
// P(n) = e_0 C(n+d-1, d) - e_1 C(n+d-2, d-1) + ... + (-1)^d e_d.
struct HilbertCoefficients {
  std::size_t d;
  std::vector<i64> e;  // e_0 .. e_d
  i64 stable_from;     // first sampled n from which the polynomial matches

  bool operator==(const HilbertCoefficients& o) const {
    return d == o.d && e == o.e;  // stable_from is informational
  }
};

i64 evaluate_hilbert_polynomial(const HilbertCoefficients& c, i64 n);

// Exact integer fit: slides a (d+1)-sample window forward until two
// consecutive windows agree and all later samples validate. Throws
// Errc::not_stable when the sampled range does not reach the polynomial.
HilbertCoefficients fit_hilbert_coefficients(const std::vector<u64>& values,
                                             const std::vector<i64>& offsets, std::size_t d);

struct HiPResult {
  bool holds;
  u64 fail_n;  // meaningful when !holds
};

// The condition HI_p: I_{n+1} cap I^{n-p} = I_{p+1} I^{n-p} for
// p_cond <= n <= n_max, checked in the quotient.
HiPResult hi_p_check(const Filtration& f, u64 p_cond, u64 n_max);

// Smallest r <= n_max with (base) I_n = I_{n+1} for all r <= n <= n_max.
u64 filtration_reduction_number(const Filtration& f, u64 n_max);

// Hilbert coefficients from the length formula
// e_i = sum_{k=i-1}^{r-1} C(k, i-1) ell(I_{k+1} / I I_k), with
// e_0 = ell(R/I). Valid when the filtration satisfies HI_p for p <= r-2.
HilbertCoefficients hsp_coefficients(const Filtration& f, u64 r);

// Both sides of the binomial identity
// C(n+d-k-1, d-1) = sum_{j=1}^{k+1} (-1)^{j-1} C(k, j-1) C(n+d-j, d-j).
std::pair<i64, i64> binomial_expand(u64 d, u64 k, u64 n);

// e_1 >= e_0 - ell(R/I_1) for the fitted coefficients.
bool huckaba_marley_bound(const Filtration& f, const HilbertCoefficients& c);

}  // namespace tightclose

#endif
