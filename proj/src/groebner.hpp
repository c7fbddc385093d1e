#ifndef TIGHTCLOSE_GROEBNER_HPP
#define TIGHTCLOSE_GROEBNER_HPP

#include <span>
#include <vector>

#include "poly.hpp"

namespace tightclose {

// S(f,g) = (lcm/lt(f)) f - (lcm/lt(g)) g for the leading terms under ord.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Remainder of multivariate division of f by the (nonzero) elements of basis:
// no term of the result is divisible by any leading monomial of the basis, and
// f - result lies in the ideal generated by the basis.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);

// Reduced Groebner basis (monic, self-reduced, unique for the order), computed
// by Buchberger's algorithm with normal pair selection and the product/chain
// criteria.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord);

// Minimal monomial generators of the leading-term ideal.
std::vector<Monomial> initial_ideal(std::span<const Polynomial> gens, const MonomialOrder& ord);

// Buchberger criterion: every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& ord);

// Drops monomials divisible by another element of the set; deterministic order.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials,
                                           const MonomialOrder& ord);

}  // namespace tightclose

#endif
