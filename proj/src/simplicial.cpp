#include "simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "graded.hpp"

namespace tightclose {

SimplicialComplex::SimplicialComplex(std::size_t n_vertices,
                                     std::vector<std::vector<int>> facets)
    : n_(n_vertices), facets_(std::move(facets)) {
  if (n_ == 0 || n_ > 16)
    fail(Errc::invalid_argument, "vertex count must be between 1 and 16");
  if (facets_.empty()) fail(Errc::invalid_argument, "a complex needs at least one facet");
  facet_masks_.reserve(facets_.size());
  d_ = 0;
  for (auto& f : facets_) {
    if (f.empty()) fail(Errc::invalid_argument, "empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    u64 mask = 0;
    for (int v : f) {
      if (v < 1 || std::size_t(v) > n_)
        fail(Errc::invalid_argument, "facet vertex " + std::to_string(v) + " out of range");
      mask |= u64(1) << (v - 1);
    }
    facet_masks_.push_back(mask);
    d_ = std::max(d_, f.size());
  }
  for (std::size_t i = 0; i < facet_masks_.size(); ++i)
    for (std::size_t j = 0; j < facet_masks_.size(); ++j) {
      if (i == j) continue;
      if ((facet_masks_[i] & facet_masks_[j]) == facet_masks_[i])
        fail(Errc::invalid_argument, "facets must be pairwise incomparable");
    }

  // enumerate all faces by expanding facet power sets
  std::set<u64> faces;
  for (u64 fm : facet_masks_) {
    // iterate subsets of fm
    u64 sub = fm;
    for (;;) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & fm;
    }
  }
  faces_.assign(faces.begin(), faces.end());
}

bool SimplicialComplex::is_face(u64 mask) const {
  return std::binary_search(faces_.begin(), faces_.end(), mask);
}

SimplicialComplex parse_facets_text(const std::string& text) {
  std::vector<std::vector<int>> facets;
  std::size_t declared_n = 0;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  int max_vertex = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    std::vector<int> facet;
    if (first == "n") {
      if (!(ls >> declared_n) || declared_n == 0)
        fail(Errc::parse, "line " + std::to_string(line_no) + ": bad vertex count");
      continue;
    }
    std::istringstream ls2(line);
    int v;
    while (ls2 >> v) {
      if (v < 1)
        fail(Errc::parse, "line " + std::to_string(line_no) + ": vertex indices are 1-based");
      facet.push_back(v);
      max_vertex = std::max(max_vertex, v);
    }
    if (!ls2.eof())
      fail(Errc::parse, "line " + std::to_string(line_no) + ": expected vertex numbers");
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) fail(Errc::parse, "facet file contains no facets");
  std::size_t n = declared_n ? declared_n : std::size_t(max_vertex);
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex parse_facets_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("bad facet JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    fail(Errc::parse, "facet JSON needs fields \"n\" and \"facets\"");
  std::size_t n = j["n"].get<std::size_t>();
  std::vector<std::vector<int>> facets;
  for (const auto& f : j["facets"]) facets.push_back(f.get<std::vector<int>>());
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex parse_facets_auto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_facets_json(text) : parse_facets_text(text);
  }
  fail(Errc::parse, "empty facet input");
}

FHVectors fh_vectors(const SimplicialComplex& complex) {
  const std::size_t d = complex.d();
  std::vector<i64> f(d + 1, 0);  // f[i] = f_{i-1} = number of faces of size i
  for (u64 mask : complex.face_masks()) ++f[std::size_t(__builtin_popcountll(mask))];

  std::vector<i64> h(d + 1, 0);
  for (std::size_t j = 0; j <= d; ++j) {
    i64 acc = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      i64 term = binomial(i64(d - i), i64(j - i)) * f[i];
      acc += ((j - i) % 2 == 0) ? term : -term;
    }
    h[j] = acc;
  }
  i64 chi = 0;
  for (std::size_t i = 1; i <= d; ++i) chi += (i % 2 == 1) ? f[i] : -f[i];
  return {std::move(f), std::move(h), chi};
}

bool is_eulerian(const SimplicialComplex& complex) {
  FHVectors v = fh_vectors(complex);
  bool by_chi = v.chi == 1;
  bool by_h = v.h.back() == 0;
  if (by_chi != by_h) fail(Errc::internal, "chi and h_d disagree on Eulerian-ness");
  return by_chi;
}

Ideal stanley_reisner_ideal(const SimplicialComplex& complex, const PolyRing& ring) {
  if (ring.nvars() != complex.n_vertices())
    fail(Errc::invalid_argument, "ring must have one variable per vertex");
  const std::size_t n = complex.n_vertices();
  std::vector<Polynomial> gens;
  for (u64 mask = 1; mask < (u64(1) << n); ++mask) {
    if (complex.is_face(mask)) continue;
    // minimal non-face: every proper subset obtained by dropping one vertex is a face
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if (mask & (u64(1) << v))
        if (!complex.is_face(mask & ~(u64(1) << v))) minimal = false;
    if (!minimal) continue;
    std::vector<u64> exps(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (u64(1) << v)) exps[v] = 1;
    gens.push_back(Polynomial::term(ring, Monomial::from_exponents(std::move(exps)), 1));
  }
  return Ideal(ring, std::move(gens));
}

QuotientRing stanley_reisner_ring(const SimplicialComplex& complex, u64 p) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= complex.n_vertices(); ++i) vars.push_back("x" + std::to_string(i));
  PolyRing ambient(PrimeField(p), std::move(vars));
  Ideal sr = stanley_reisner_ideal(complex, ambient);
  return QuotientRing(ambient, std::move(sr), RingKind::stanley_reisner);
}

namespace {

bool is_linear_form(const Polynomial& f) {
  if (f.is_zero()) return false;
  for (const auto& t : f.terms())
    if (t.monomial.total_degree() != 1) return false;
  return true;
}

// rank of the coefficient matrix restricted to the facet's columns
std::size_t facet_rank(const std::vector<Polynomial>& forms, const std::vector<int>& facet,
                       const PrimeField& field) {
  std::vector<std::vector<u64>> rows;
  for (const Polynomial& f : forms) {
    std::vector<u64> row(facet.size(), 0);
    for (const auto& t : f.terms())
      for (std::size_t c = 0; c < facet.size(); ++c)
        if (t.monomial.exponent(std::size_t(facet[c] - 1)) == 1) row[c] = t.coeff;
    rows.push_back(std::move(row));
  }
  // Gaussian elimination over F_p
  std::size_t rank = 0;
  for (std::size_t col = 0; col < facet.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    u64 inv = field.inv(rows[rank][col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      u64 factor = field.mul(rows[r][col], inv);
      for (std::size_t c = col; c < facet.size(); ++c)
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool check_lsop(const SimplicialComplex& complex, const std::vector<Polynomial>& forms) {
  if (forms.empty()) return false;
  const PolyRing& ring = forms[0].ring();
  if (ring.nvars() != complex.n_vertices())
    fail(Errc::invalid_argument, "forms must live in the face ring's ambient ring");
  for (const Polynomial& f : forms) {
    check_same_ring(forms[0], f);
    if (!is_linear_form(f))
      fail(Errc::invalid_argument, "lsop candidates must be homogeneous of degree 1");
  }
  if (forms.size() != complex.d()) return false;
  const PrimeField& field = ring.field();
  for (const auto& facet : complex.facets())
    if (facet_rank(forms, facet, field) != facet.size()) return false;
  return true;
}

Ideal lsop_product_tight_closure(const SimplicialComplex& complex, const QuotientRing& ring,
                                 const LsopFamily& family, const std::vector<u64>& s) {
  if (family.ideals.size() != s.size())
    fail(Errc::invalid_argument, "one exponent per lsop ideal required");
  u64 total = 0;
  Ideal prod = Ideal::unit(ring.ambient());
  for (std::size_t i = 0; i < family.ideals.size(); ++i) {
    if (!check_lsop(complex, family.ideals[i].gens()))
      fail(Errc::invalid_argument, "family member " + std::to_string(i + 1) +
                                       " is not a linear system of parameters");
    total = checked_add(total, s[i]);
    if (s[i]) prod = product(prod, power(family.ideals[i], s[i]));
  }
  Ideal m_power = power(ring.maximal_ideal(), total);
  if (!ring.ideal_contains(m_power, prod))
    fail(Errc::internal, "product of lsop powers escapes m^(sum s)");
  return m_power;
}

u64 length_via_h(const SimplicialComplex& complex, u64 n) {
  FHVectors v = fh_vectors(complex);
  const std::size_t d = complex.d();
  // h^{(i)}(1)/i! = sum_j C(j, i) h_j
  i64 acc = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    i64 deriv = 0;
    for (std::size_t j = 0; j <= d; ++j) deriv += binomial(i64(j), i64(i)) * v.h[j];
    i64 term = deriv * binomial(i64(n) + i64(d - i), i64(d - i));
    acc += (i % 2 == 0) ? term : -term;
  }
  if (acc < 0) fail(Errc::internal, "negative length from the h-vector formula");
  return u64(acc);
}

i64 ed_star(const SimplicialComplex& complex, const QuotientRing& ring, const LsopFamily& family,
            const std::vector<u64>& s) {
  if (family.ideals.size() != s.size())
    fail(Errc::invalid_argument, "one exponent per lsop ideal required");
  for (const Ideal& ideal : family.ideals)
    if (!check_lsop(complex, ideal.gens()))
      fail(Errc::invalid_argument, "family member is not a linear system of parameters");
  (void)ring;
  return fh_vectors(complex).h.back();
}

namespace {

// Vector-space basis, as polynomials, of the degree-`degree` piece spanned by
// the given homogeneous polynomials in the monomial-modulus quotient.
std::vector<Polynomial> echelon_piece(const QuotientRing& ring,
                                      const std::vector<Polynomial>& vectors, u64 degree) {
  std::vector<Monomial> basis = standard_monomials_of_degree(ring, degree);
  EchelonBasis span(ring.ambient().field(), basis.size());
  for (const Polynomial& v : vectors) {
    if (v.is_zero()) continue;
    span.insert(graded_coordinates(ring, v, degree, basis));
  }
  std::vector<Polynomial> out;
  out.reserve(span.dim());
  for (const auto& row : span.rows()) {
    std::vector<std::pair<Monomial, u64>> terms;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) terms.emplace_back(basis[j], row[j]);
    out.push_back(Polynomial::from_terms(ring.ambient(), std::move(terms)));
  }
  return out;
}

// piece basis of (span of `piece`) * (ideal generated by `gens`) one degree up
std::vector<Polynomial> multiply_piece(const QuotientRing& ring,
                                       const std::vector<Polynomial>& piece,
                                       const std::vector<Polynomial>& gens, u64 target_degree) {
  std::vector<Polynomial> products;
  products.reserve(piece.size() * gens.size());
  for (const Polynomial& b : piece)
    for (const Polynomial& g : gens) products.push_back(b * g);
  return echelon_piece(ring, products, target_degree);
}

// piece basis of I_1^{s_1}...I_g^{s_g} in degree sum(s_i * deg gen_i)
std::vector<Polynomial> product_power_piece(const QuotientRing& ring, const LsopFamily& family,
                                            const std::vector<u64>& s) {
  std::vector<Polynomial> piece{Polynomial::constant(ring.ambient(), 1)};
  u64 degree = 0;
  for (std::size_t i = 0; i < family.ideals.size(); ++i)
    for (u64 t = 0; t < s[i]; ++t) {
      degree += 1;  // lsop generators are linear
      piece = multiply_piece(ring, piece, family.ideals[i].gens(), degree);
    }
  return piece;
}

}  // namespace

bool joint_reduction_check(const QuotientRing& ring, const LsopFamily& family,
                           const std::vector<Polynomial>& a, u64 s_max) {
  const std::size_t g = family.ideals.size();
  if (a.size() != g) fail(Errc::invalid_argument, "one element per ideal required");
  for (std::size_t i = 0; i < g; ++i)
    if (!ring.contains_poly(family.ideals[i], a[i]))
      fail(Errc::invalid_argument, "a_" + std::to_string(i + 1) + " does not lie in I_" +
                                       std::to_string(i + 1));

  // iterate exponent tuples with s_i >= 1 and sum <= s_max
  std::vector<u64> s(g, 1);
  u64 total = g;
  if (total > s_max) return true;  // vacuous window
  for (;;) {
    // both sides are generated in degree |S|; compare the spans there
    std::vector<Polynomial> lhs = product_power_piece(ring, family, s);
    std::vector<Polynomial> rhs_vectors;
    for (std::size_t i = 0; i < g; ++i) {
      if (a[i].is_zero()) continue;
      std::vector<u64> si = s;
      si[i] -= 1;
      for (const Polynomial& b : product_power_piece(ring, family, si))
        rhs_vectors.push_back(a[i] * b);
    }
    std::vector<Polynomial> rhs = echelon_piece(ring, rhs_vectors, total);
    // rhs subset lhs holds term by term (a_i in I_i); dimension decides
    if (rhs.size() != lhs.size()) return false;

    // next tuple
    std::size_t i = 0;
    for (;;) {
      if (i == g) return true;
      ++s[i];
      ++total;
      if (total <= s_max) break;
      total -= s[i] - 1;
      s[i] = 1;
      ++i;
    }
  }
}

Polynomial random_linear_form(const PolyRing& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, ring.characteristic() - 1);
  for (;;) {
    std::vector<std::pair<Monomial, u64>> terms;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      std::vector<u64> e(ring.nvars(), 0);
      e[i] = 1;
      terms.emplace_back(Monomial::from_exponents(std::move(e)), dist(rng));
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

LsopFamily draw_lsop_family(const SimplicialComplex& complex, const PolyRing& ring,
                            std::size_t count, u64 trials, std::mt19937_64& rng, u64& draws) {
  LsopFamily family;
  for (std::size_t i = 0; i < count; ++i) {
    bool found = false;
    for (u64 attempt = 0; attempt < trials && !found; ++attempt) {
      ++draws;
      std::vector<Polynomial> forms;
      for (std::size_t k = 0; k < complex.d(); ++k) forms.push_back(random_linear_form(ring, rng));
      if (check_lsop(complex, forms)) {
        family.ideals.emplace_back(ring, std::move(forms));
        found = true;
      }
    }
    if (!found)
      fail(Errc::not_stable, "failed to draw a linear system of parameters; raise trials or p");
  }
  return family;
}

EulerianReport eulerian_equivalences(const SimplicialComplex& complex, u64 p, u64 s_max,
                                     u64 trials, u64 seed) {
  EulerianReport report{};
  report.seed = seed;
  std::mt19937_64 rng(seed);
  QuotientRing ring = stanley_reisner_ring(complex, p);
  const PolyRing& ambient = ring.ambient();
  const std::size_t d = complex.d();
  FHVectors vectors = fh_vectors(complex);

  report.eulerian = is_eulerian(complex);

  u64 draws = 0;
  // (2) r(m) <= d-1 for a random lsop: J m^n = m^{n+1} iff J R_n spans R_{n+1}
  LsopFamily reduction_draw = draw_lsop_family(complex, ambient, 1, trials, rng, draws);
  const u64 scan_limit = d + 3;
  u64 reduction_number = scan_limit + 1;
  for (u64 n = scan_limit + 1; n-- > 0;) {
    if (linear_times_piece_surjective(ring, reduction_draw.ideals[0].gens(), n + 1))
      reduction_number = n;
    else
      break;
  }
  if (reduction_number > scan_limit)
    fail(Errc::not_stable,
         "lsop did not reduce m within the scan window; is k[Delta] Cohen-Macaulay?");
  report.reduction_number = reduction_number;
  report.reduction_small = reduction_number <= d - 1;

  // (3) joint-reduction equalities via the closed-form tight closures:
  // (a_1,...,a_d) m^{|S|-1} = m^{|S|} for all tuples with sum <= s_max
  LsopFamily family = draw_lsop_family(complex, ambient, d, trials, rng, draws);
  std::vector<Polynomial> a;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (const Ideal& ideal : family.ideals) {
    for (;;) {
      ++draws;
      Polynomial combo = Polynomial::zero(ambient);
      for (const Polynomial& g : ideal.gens()) combo = combo + g.scaled(dist(rng));
      if (!combo.is_zero()) {
        a.push_back(combo);
        break;
      }
    }
  }
  // certify the tuple is a joint reduction: sum a_i prod_{j!=i} I_j must
  // reduce prod I_j; both sides generated in one degree, so compare piece
  // dimensions at increasing powers
  std::vector<u64> ones(d, 1);
  u64 certificate_n = d + 2;
  {
    std::vector<Polynomial> mixed_gens;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<u64> si(d, 1);
      si[i] = 0;
      for (const Polynomial& b : product_power_piece(ring, family, si))
        mixed_gens.push_back(a[i] * b);
    }
    std::vector<Polynomial> p_piece = product_power_piece(ring, family, ones);  // P in degree d
    std::vector<Polynomial> power_piece = p_piece;                              // P^{n+1} piece
    std::vector<Polynomial> pn_piece{Polynomial::constant(ambient, 1)};         // P^n piece
    for (u64 n = 0; n <= d + 1; ++n) {
      std::vector<Polynomial> lhs =
          multiply_piece(ring, pn_piece, mixed_gens, d * (n + 1));  // mixed * P^n
      if (lhs.size() == power_piece.size()) {
        certificate_n = n;
        break;
      }
      pn_piece = power_piece;
      power_piece = multiply_piece(ring, power_piece, p_piece, d * (n + 2));
    }
  }
  if (certificate_n > d + 1) {
    report.note = "random tuple failed the joint-reduction certificate";
    report.joint_reduction_full = false;
  } else {
    bool all_hold = true;
    for (u64 total = d; total <= std::max<u64>(s_max, d); ++total)
      if (!linear_times_piece_surjective(ring, a, total)) {
        all_hold = false;
        break;
      }
    report.joint_reduction_full = all_hold;
  }

  // (4) alternating sum of e_d^* over nonempty sub-products
  i64 sum4 = 0;
  for (std::size_t size = d; size >= 1; --size) {
    i64 count = binomial(i64(d), i64(size));
    i64 value = vectors.h.back();  // e_d^* of any nonempty lsop product
    i64 term = count * value;
    sum4 += ((d - size) % 2 == 0) ? term : -term;
  }
  report.ed_star_sum = sum4;
  report.ed_star_sum_zero = sum4 == 0;

  report.draws_used = draws;
  report.consistent = (report.eulerian == report.reduction_small) &&
                      (report.eulerian == report.joint_reduction_full) &&
                      (report.eulerian == report.ed_star_sum_zero);
  return report;
}

}  // namespace tightclose
