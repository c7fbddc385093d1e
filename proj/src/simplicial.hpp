#ifndef TIGHTCLOSE_SIMPLICIAL_HPP
#define TIGHTCLOSE_SIMPLICIAL_HPP

#include <random>
#include <string>

#include "quotient.hpp"

namespace tightclose {

// Simplicial complex given by facets (vertices are 1-based). Facets must be
// pairwise incomparable; dim = max facet size - 1.
class SimplicialComplex {
public:
  SimplicialComplex(std::size_t n_vertices, std::vector<std::vector<int>> facets);

  std::size_t n_vertices() const { return n_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  // d = dim + 1 = max facet size (the Krull dimension of k[Delta]).
  std::size_t d() const { return d_; }

  // All faces as vertex bitmasks, including the empty face.
  const std::vector<u64>& face_masks() const { return faces_; }
  bool is_face(u64 mask) const;

private:
  std::size_t n_;
  std::size_t d_;
  std::vector<std::vector<int>> facets_;
  std::vector<u64> facet_masks_;
  std::vector<u64> faces_;
};

// Text format: one facet per line, whitespace-separated 1-based vertex
// indices; '#' starts a comment; an optional leading "n <count>" line pins the
// vertex count. JSON alternative: {"n": int, "facets": [[int]]}.
SimplicialComplex parse_facets_text(const std::string& text);
SimplicialComplex parse_facets_json(const std::string& text);
SimplicialComplex parse_facets_auto(const std::string& text);

struct FHVectors {
  std::vector<i64> f;  // f_{-1} .. f_{d-1}
  std::vector<i64> h;  // h_0 .. h_d
  i64 chi;
};

FHVectors fh_vectors(const SimplicialComplex& complex);
bool is_eulerian(const SimplicialComplex& complex);

// Stanley-Reisner ideal: squarefree monomials of the minimal non-faces.
Ideal stanley_reisner_ideal(const SimplicialComplex& complex, const PolyRing& ring);

// k[Delta] over F_p with variables x1..xn.
QuotientRing stanley_reisner_ring(const SimplicialComplex& complex, u64 p);

// Linear-system-of-parameters test: d homogeneous linear forms whose
// restriction to every facet F has full rank |F|.
bool check_lsop(const SimplicialComplex& complex, const std::vector<Polynomial>& forms);

struct LsopFamily {
  std::vector<Ideal> ideals;  // each generated by d linear forms
};

// Closed form (I_1^{s_1} ... I_g^{s_g})* = m^{s_1+...+s_g}; validates the lsop
// property and the containment of the product in the power of m.
Ideal lsop_product_tight_closure(const SimplicialComplex& complex, const QuotientRing& ring,
                                 const LsopFamily& family, const std::vector<u64>& s);

// ell(R/m^{n+1}) from the h-vector derivative formula.
u64 length_via_h(const SimplicialComplex& complex, u64 n);

// e_d^* of a power product of lsop ideals, which equals h_d.
i64 ed_star(const SimplicialComplex& complex, const QuotientRing& ring, const LsopFamily& family,
            const std::vector<u64>& s);

// Checks I_1^{s_1}...I_d^{s_d} = sum_i a_i I^{S_i} for all s_i >= 1 with
// sum s_i <= s_max; a_i must lie in I_i.
bool joint_reduction_check(const QuotientRing& ring, const LsopFamily& family,
                           const std::vector<Polynomial>& a, u64 s_max);

struct EulerianReport {
  bool eulerian;              // (1) chi == 1
  bool reduction_small;       // (2) r(m) <= d-1
  bool joint_reduction_full;  // (3) the joint-reduction ideal equalities
  bool ed_star_sum_zero;      // (4) the alternating e_d^* sum vanishes
  bool consistent;
  u64 reduction_number;
  i64 ed_star_sum;
  u64 seed;
  u64 draws_used;
  std::string note;
};

// Runs the four equivalent conditions of the face-ring theorem with seeded
// random lsop and joint-reduction draws over F_p. Cohen-Macaulayness of
// k[Delta] is assumed, not verified.
EulerianReport eulerian_equivalences(const SimplicialComplex& complex, u64 p, u64 s_max,
                                     u64 trials, u64 seed);

// Random degree-one form draws used by the equivalence checks (exposed for
// deterministic tests).
Polynomial random_linear_form(const PolyRing& ring, std::mt19937_64& rng);
LsopFamily draw_lsop_family(const SimplicialComplex& complex, const PolyRing& ring,
                            std::size_t count, u64 trials, std::mt19937_64& rng, u64& draws);

}  // namespace tightclose

#endif
