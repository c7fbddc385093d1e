#ifndef TIGHTCLOSE_RING_HPP
#define TIGHTCLOSE_RING_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fp.hpp"

namespace tightclose {

// Polynomial ring F_p[x_1,...,x_n]. Cheap to copy; rings compare structurally
// (same characteristic and same variable list).
class PolyRing {
public:
  PolyRing(PrimeField field, std::vector<std::string> variables)
      : d_(std::make_shared<Data>(Data{field, std::move(variables)})) {
    if (d_->vars.empty()) fail(Errc::invalid_argument, "a polynomial ring needs variables");
    for (std::size_t i = 0; i < d_->vars.size(); ++i) {
      if (!valid_identifier(d_->vars[i]))
        fail(Errc::invalid_argument, "invalid variable name '" + d_->vars[i] + "'");
      for (std::size_t j = i + 1; j < d_->vars.size(); ++j)
        if (d_->vars[i] == d_->vars[j])
          fail(Errc::invalid_argument, "duplicate variable name '" + d_->vars[i] + "'");
    }
  }

  const PrimeField& field() const { return d_->field; }
  u64 characteristic() const { return d_->field.p(); }
  std::size_t nvars() const { return d_->vars.size(); }
  const std::vector<std::string>& variables() const { return d_->vars; }
  const std::string& variable_name(std::size_t i) const { return d_->vars.at(i); }

  std::optional<std::size_t> variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < d_->vars.size(); ++i)
      if (d_->vars[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const PolyRing& o) const {
    return d_ == o.d_ || (d_->field == o.d_->field && d_->vars == o.d_->vars);
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  std::string description() const {
    std::string s = "F_" + std::to_string(characteristic()) + "[";
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (i) s += ",";
      s += d_->vars[i];
    }
    return s + "]";
  }

  static bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

private:
  struct Data {
    PrimeField field;
    std::vector<std::string> vars;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace tightclose

#endif
