#ifndef TIGHTCLOSE_MONOMIAL_HPP
#define TIGHTCLOSE_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "intmath.hpp"

namespace tightclose {

// Dense exponent vector, one slot per ambient variable. Exponent arithmetic is
// overflow-checked since Frobenius powers scale exponents by q = p^e.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

  static Monomial from_exponents(std::vector<u64> exps) {
    Monomial m(0);
    m.e_ = std::move(exps);
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  u64 exponent(std::size_t i) const { return e_.at(i); }
  const std::vector<u64>& exponents() const { return e_; }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](u64 v) { return v == 0; });
  }

  u64 total_degree() const {
    u64 d = 0;
    for (u64 v : e_) d = checked_add(d, v);
    return d;
  }

  bool divides(const Monomial& m) const {
    check_dim(m);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial mul(const Monomial& m) const {
    check_dim(m);
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_add(e_[i], m.e_[i]);
    return r;
  }

  // this / m; requires m | this.
  Monomial div(const Monomial& m) const {
    check_dim(m);
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (m.e_[i] > e_[i]) fail(Errc::invalid_argument, "monomial division is not exact");
      r.e_[i] = e_[i] - m.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_dim(b);
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  bool coprime(const Monomial& m) const {
    check_dim(m);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && m.e_[i] != 0) return false;
    return true;
  }

  Monomial pow(u64 k) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_mul(e_[i], k);
    return r;
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

private:
  void check_dim(const Monomial& m) const {
    if (e_.size() != m.e_.size())
      fail(Errc::invalid_argument, "monomials have different variable counts");
  }

  std::vector<u64> e_;
};

}  // namespace tightclose

#endif
