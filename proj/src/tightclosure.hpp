#ifndef TIGHTCLOSE_TIGHTCLOSURE_HPP
#define TIGHTCLOSE_TIGHTCLOSURE_HPP

#include <string>

#include "quotient.hpp"

namespace tightclose {

// The diagonal hypersurface ring R = F_p[x,y,z]/(x^N + y^N + z^N) with the
// parameter ideal I = (y,z), the maximal ideal m = (x,y,z) and the test
// element z^{N-1}. Requires p prime with p not dividing N.
struct DiagonalRing {
  u64 n;  // the diagonal exponent N
  u64 p;
  QuotientRing ring;
  Ideal param_ideal;    // I = (y,z)
  Ideal max_ideal;      // m = (x,y,z)
  Polynomial test_element;  // z^{N-1}
};

DiagonalRing make_diagonal_ring(u64 n, u64 p);

// Outcome of a bounded Frobenius membership probe. A failed probe at some
// q = p^e is a proof of non-membership (the probe multiplies by a test
// element); passing every probe up to e_max is evidence, not proof.
struct MembershipVerdict {
  bool member;
  u64 e;  // NotMember: smallest failing e.  MemberUpTo: the tested e_max.

  bool operator==(const MembershipVerdict& o) const = default;
};

// Tests c f^q in J^[q] (mod the hypersurface) for q = p^e, e in
// [e_min, e_max], with c the ring's test element. J is given by lifted
// generators.
MembershipVerdict tight_membership(const DiagonalRing& d, const Polynomial& f, const Ideal& j,
                                   u64 e_min, u64 e_max);

// Closed form of (I^k)*: I^k for N = 2, and m^{k+1} + I^k for N >= 3.
// Generators are lifted to the ambient ring and interreduced.
Ideal tight_closure_power_diagonal(const DiagonalRing& d, u64 k);

struct ClosedFormProbe {
  std::string monomial;
  MembershipVerdict verdict;
  bool expected;  // membership in the closed form
  bool agree;
};

struct ClosedFormReport {
  u64 k;
  u64 e_max;
  std::vector<ClosedFormProbe> probes;
  std::size_t disagreements;
};

// Probes every monomial x^a y^b z^c with a+b+c <= k+1 against (I^k)* and
// compares with the closed form.
ClosedFormReport verify_closed_form(const DiagonalRing& d, u64 k, u64 e_max);

// Smallest r with I (I^k)* = (I^{k+1})* for all r <= k <= k_max, computed from
// the closed forms; requires k_max >= N-1.
u64 tight_reduction_number(const DiagonalRing& d, u64 k_max);

struct FRationalityResult {
  bool f_rational;
  std::string witness;  // non-membership/membership evidence description
  i64 e1_star;          // first tight Hilbert coefficient, from the filtration fit
};

// F-rationality probe: checks x in I* by membership and cross-checks against
// e_1^* of the tight filtration.
FRationalityResult f_rationality_probe(const DiagonalRing& d, u64 e_max);

}  // namespace tightclose

#endif
