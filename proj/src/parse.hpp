#ifndef TIGHTCLOSE_PARSE_HPP
#define TIGHTCLOSE_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "poly.hpp"

namespace tightclose {

// Text syntax for polynomials: terms like `3*X^2*Y + Z^5 + 1` over the ring's
// declared variables. parse(format(f)) == f exactly.
Polynomial parse_polynomial(const PolyRing& ring, std::string_view text);
std::string format_polynomial(const Polynomial& f);
std::string format_monomial(const PolyRing& ring, const Monomial& m);

// Semicolon- or newline-separated generator list.
std::vector<Polynomial> parse_polynomial_list(const PolyRing& ring, std::string_view text);

}  // namespace tightclose

#endif
