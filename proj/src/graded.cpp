#include "graded.hpp"

#include <algorithm>
#include <map>

namespace tightclose {

namespace {

void check_monomial_modulus(const QuotientRing& ring) {
  for (const Polynomial& g : ring.modulus().gens())
    if (!g.is_monomial())
      fail(Errc::unsupported, "graded-piece computations need a monomial modulus");
}

}  // namespace

std::vector<Monomial> standard_monomials_of_degree(const QuotientRing& ring, u64 degree) {
  check_monomial_modulus(ring);
  std::vector<Monomial> lead =
      ring.modulus().is_zero_ideal() ? std::vector<Monomial>{} : ring.modulus().leading_monomials();
  const std::size_t nv = ring.ambient().nvars();
  std::vector<Monomial> out;
  std::vector<u64> e(nv, 0);
  auto rec = [&](auto&& self, std::size_t i, u64 remaining) -> void {
    if (i + 1 == nv) {
      e[i] = remaining;
      Monomial m = Monomial::from_exponents(e);
      if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); }))
        out.push_back(std::move(m));
      e[i] = 0;
      return;
    }
    for (u64 v = 0; v <= remaining; ++v) {
      e[i] = v;
      self(self, i + 1, remaining - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

void EchelonBasis::reduce(std::vector<u64>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    u64 c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < width_; ++j)
      v[j] = field_.sub(v[j], field_.mul(c, rows_[r][j]));
  }
}

bool EchelonBasis::insert(std::vector<u64> v) {
  if (v.size() != width_) fail(Errc::invalid_argument, "vector width mismatch");
  reduce(v);
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == width_) return false;
  u64 inv = field_.inv(v[pivot]);
  for (std::size_t j = 0; j < width_; ++j) v[j] = field_.mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(std::vector<u64> v) const {
  if (v.size() != width_) fail(Errc::invalid_argument, "vector width mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](u64 c) { return c == 0; });
}

std::vector<u64> graded_coordinates(const QuotientRing& ring, const Polynomial& f, u64 degree,
                                    const std::vector<Monomial>& basis) {
  std::map<std::vector<u64>, std::size_t> index;
  // local index map per call would be wasteful for bulk use; callers with many
  // polynomials go through ideal_graded_piece which builds it once
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exponents(), i);
  std::vector<u64> v(basis.size(), 0);
  for (const auto& t : f.terms()) {
    if (t.monomial.total_degree() != degree)
      fail(Errc::invalid_argument, "polynomial is not homogeneous of the requested degree");
    auto it = index.find(t.monomial.exponents());
    if (it != index.end()) v[it->second] = ring.ambient().field().add(v[it->second], t.coeff);
  }
  return v;
}

namespace {

struct PieceContext {
  std::vector<Monomial> basis;
  std::map<std::vector<u64>, std::size_t> index;

  PieceContext(const QuotientRing& ring, u64 degree)
      : basis(standard_monomials_of_degree(ring, degree)) {
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exponents(), i);
  }

  std::vector<u64> coords(const QuotientRing& ring, const Polynomial& f,
                          const Monomial& shift) const {
    std::vector<u64> v(basis.size(), 0);
    for (const auto& t : f.terms()) {
      auto it = index.find(t.monomial.mul(shift).exponents());
      if (it != index.end())
        v[it->second] = ring.ambient().field().add(v[it->second], t.coeff);
    }
    return v;
  }
};

void accumulate_ideal_piece(const QuotientRing& ring, std::span<const Polynomial> gens,
                            u64 degree, const PieceContext& ctx, EchelonBasis& span) {
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) fail(Errc::invalid_argument, "generators must be homogeneous");
    u64 dg = g.total_degree();
    if (dg > degree) continue;
    for (const Monomial& m : standard_monomials_of_degree(ring, degree - dg))
      span.insert(ctx.coords(ring, g, m));
  }
}

}  // namespace

EchelonBasis ideal_graded_piece(const QuotientRing& ring, std::span<const Polynomial> gens,
                                u64 degree, const std::vector<Monomial>& basis) {
  PieceContext ctx(ring, degree);
  if (basis.size() != ctx.basis.size())
    fail(Errc::invalid_argument, "basis does not match the requested degree");
  EchelonBasis span(ring.ambient().field(), ctx.basis.size());
  accumulate_ideal_piece(ring, gens, degree, ctx, span);
  return span;
}

bool single_degree_ideal_equal(const QuotientRing& ring, std::span<const Polynomial> a,
                               std::span<const Polynomial> b, u64 degree) {
  PieceContext ctx(ring, degree);
  EchelonBasis span_a(ring.ambient().field(), ctx.basis.size());
  EchelonBasis span_b(ring.ambient().field(), ctx.basis.size());
  accumulate_ideal_piece(ring, a, degree, ctx, span_a);
  accumulate_ideal_piece(ring, b, degree, ctx, span_b);
  if (span_a.dim() != span_b.dim()) return false;
  // same dimension: containment one way settles equality
  for (const Polynomial& g : b) {
    if (g.is_zero()) continue;
    u64 dg = g.total_degree();
    if (dg > degree) continue;
    for (const Monomial& m : standard_monomials_of_degree(ring, degree - dg))
      if (!span_a.contains(ctx.coords(ring, g, m))) return false;
  }
  return true;
}

bool linear_times_piece_surjective(const QuotientRing& ring, std::span<const Polynomial> forms,
                                   u64 degree) {
  if (degree == 0) fail(Errc::invalid_argument, "degree must be positive");
  PieceContext ctx(ring, degree);
  EchelonBasis span(ring.ambient().field(), ctx.basis.size());
  for (const Polynomial& f : forms) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous() || f.total_degree() != 1)
      fail(Errc::invalid_argument, "forms must be homogeneous of degree 1");
    for (const Monomial& m : standard_monomials_of_degree(ring, degree - 1))
      span.insert(ctx.coords(ring, f, m));
  }
  return span.dim() == ctx.basis.size();
}

}  // namespace tightclose
