#ifndef TIGHTCLOSE_ORDER_HPP
#define TIGHTCLOSE_ORDER_HPP

#include <string>
#include <tuple>

#include "monomial.hpp"

namespace tightclose {

enum class OrderKind { grevlex, lex, block };

// A term order on monomials: graded reverse lexicographic, lexicographic, or a
// two-block elimination order (first `split` variables eliminated, grevlex
// within each block).
class MonomialOrder {
public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
  static MonomialOrder block(std::size_t split) {
    if (split == 0) fail(Errc::invalid_argument, "block order needs a positive split");
    return MonomialOrder(OrderKind::block, split);
  }

  OrderKind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  // Returns +1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      fail(Errc::invalid_argument, "cannot compare monomials of different variable counts");
    switch (kind_) {
      case OrderKind::grevlex:
        return grevlex_cmp(a, b, 0, a.nvars());
      case OrderKind::lex:
        return lex_cmp(a, b);
      case OrderKind::block: {
        if (split_ >= a.nvars())
          fail(Errc::invalid_argument, "block split must be smaller than the variable count");
        if (int c = grevlex_cmp(a, b, 0, split_)) return c;
        return grevlex_cmp(a, b, split_, a.nvars());
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::grevlex:
        return "grevlex";
      case OrderKind::lex:
        return "lex";
      case OrderKind::block:
        return "block:" + std::to_string(split_);
    }
    return "?";
  }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && split_ == o.split_;
  }
  bool operator<(const MonomialOrder& o) const {
    return std::tuple(kind_, split_) < std::tuple(o.kind_, o.split_);
  }

private:
  MonomialOrder(OrderKind k, std::size_t s) : kind_(k), split_(s) {}

  static int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    u64 da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da = checked_add(da, a.exponent(i));
      db = checked_add(db, b.exponent(i));
    }
    if (da != db) return da < db ? -1 : 1;
    // equal degree: last nonzero difference negative means a is larger
    for (std::size_t i = hi; i-- > lo;) {
      u64 ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
  }

  static int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      u64 ea = a.exponent(i), eb = b.exponent(i);
      if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_;
  std::size_t split_;
};

// Strict "greater" functor, usable as a std::map comparator for
// leading-term-first iteration.
struct MonomialGreater {
  MonomialOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord.greater(a, b); }
};

}  // namespace tightclose

#endif
