#ifndef TIGHTCLOSE_GRADED_HPP
#define TIGHTCLOSE_GRADED_HPP

#include <span>

#include "quotient.hpp"

namespace tightclose {

// Linear algebra in a single graded piece of a quotient by a monomial ideal
// (Stanley-Reisner rings). Vectors are coordinates over the standard
// monomials of the given degree; monomials inside the modulus reduce to zero.

std::vector<Monomial> standard_monomials_of_degree(const QuotientRing& ring, u64 degree);

// Row-echelon subspace basis over F_p with incremental insertion.
class EchelonBasis {
public:
  EchelonBasis(PrimeField field, std::size_t width)
      : field_(field), width_(width) {}

  // Reduces v against the basis; inserts the residue if nonzero. Returns true
  // when the dimension grew.
  bool insert(std::vector<u64> v);
  bool contains(std::vector<u64> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<std::vector<u64>>& rows() const { return rows_; }

private:
  void reduce(std::vector<u64>& v) const;

  PrimeField field_;
  std::size_t width_;
  std::vector<std::vector<u64>> rows_;  // echelon rows, pivot normalized to 1
  std::vector<std::size_t> pivots_;     // pivot column per row
};

// Coordinates of a homogeneous polynomial of the given degree in the standard
// monomial basis; terms with non-standard monomials are dropped (they lie in
// the modulus).
std::vector<u64> graded_coordinates(const QuotientRing& ring, const Polynomial& f, u64 degree,
                                    const std::vector<Monomial>& basis);

// Span of the degree-`degree` piece of the ideal generated by the homogeneous
// gens (each multiplied by all standard monomials of the complementary
// degree).
EchelonBasis ideal_graded_piece(const QuotientRing& ring, std::span<const Polynomial> gens,
                                u64 degree, const std::vector<Monomial>& basis);

// Equality of ideals generated in one common degree: their pieces in that
// degree coincide.
bool single_degree_ideal_equal(const QuotientRing& ring, std::span<const Polynomial> a,
                               std::span<const Polynomial> b, u64 degree);

// Does (forms) * R_{degree-1} span all of R_degree? This is J m^{n} = m^{n+1}
// at n = degree-1 for an ideal J generated by the degree-one forms.
bool linear_times_piece_surjective(const QuotientRing& ring,
                                   std::span<const Polynomial> forms, u64 degree);

}  // namespace tightclose

#endif
