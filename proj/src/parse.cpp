#include "parse.hpp"

#include <cctype>

namespace tightclose {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::parse, msg + " at position " + std::to_string(pos));
  }

  u64 read_nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      error("expected a number");
    u64 v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = checked_mul(v, 10);
      v = checked_add(v, u64(s[pos] - '0'));
      ++pos;
    }
    return v;
  }

  std::string read_identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    if (start == pos) error("expected a variable name");
    return std::string(s.substr(start, pos - start));
  }
};

// term := factor ('*'? factor)* where factor is a number or var('^' nat)?;
// a '*' between factors is optional only after a leading coefficient when the
// canonical printer emitted it, but we accept juxtaposition-free input with
// explicit '*' separators and also bare `2X` style for convenience.
std::pair<Monomial, u64> parse_term(Cursor& cur, const PolyRing& ring) {
  const PrimeField& F = ring.field();
  u64 coeff = 1;
  std::vector<u64> exps(ring.nvars(), 0);
  bool saw_factor = false;
  bool pending_star = false;
  for (;;) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = F.mul(coeff, F.reduce(cur.read_nat()));
      saw_factor = true;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t mark = cur.pos;
      std::string name = cur.read_identifier();
      auto idx = ring.variable_index(name);
      if (!idx) {
        cur.pos = mark;
        cur.error("unknown variable '" + name + "'");
      }
      u64 e = 1;
      if (cur.accept('^')) e = cur.read_nat();
      exps[*idx] = checked_add(exps[*idx], e);
      saw_factor = true;
    } else {
      if (pending_star) cur.error("expected a factor after '*'");
      break;
    }
    pending_star = cur.accept('*');
    if (!pending_star) {
      // allow juxtaposition of further factors; loop re-tests peek()
      char n = cur.peek();
      if (!(std::isalnum(static_cast<unsigned char>(n)) || n == '_')) break;
    }
  }
  if (!saw_factor) cur.error("expected a term");
  return {Monomial::from_exponents(std::move(exps)), coeff};
}

}  // namespace

Polynomial parse_polynomial(const PolyRing& ring, std::string_view text) {
  Cursor cur{text};
  std::vector<std::pair<Monomial, u64>> terms;
  const PrimeField& F = ring.field();

  bool negate = false;
  if (cur.accept('-'))
    negate = true;
  else
    cur.accept('+');

  for (;;) {
    auto [m, c] = parse_term(cur, ring);
    terms.emplace_back(std::move(m), negate ? F.neg(c) : c);
    if (cur.eof()) break;
    if (cur.accept('+'))
      negate = false;
    else if (cur.accept('-'))
      negate = true;
    else
      cur.error("expected '+' or '-'");
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  if (m.nvars() != ring.nvars())
    fail(Errc::invalid_argument, "monomial does not match the ring's variable count");
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    u64 e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variable_name(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    bool unit = t.coeff == 1;
    if (!unit) s += std::to_string(t.coeff);
    if (t.monomial.is_one()) {
      if (unit) s += "1";
    } else {
      if (!unit) s += "*";
      s += format_monomial(f.ring(), t.monomial);
    }
  }
  return s;
}

std::vector<Polynomial> parse_polynomial_list(const PolyRing& ring, std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    // skip empty / all-whitespace segments
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        out.push_back(parse_polynomial(ring, piece));
        return;
      }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ';' || text[i] == '\n') {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

}  // namespace tightclose
