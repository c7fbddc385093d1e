#ifndef TIGHTCLOSE_ERROR_HPP
#define TIGHTCLOSE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tightclose {

enum class Errc {
  invalid_argument,  // bad input: dimension mismatch, ring mismatch, violated precondition
  parse,             // malformed polynomial / facet text
  overflow,          // exponent or length arithmetic would overflow
  unsupported,       // request outside the implemented domain (e.g. q not a power of p)
  not_stable,        // Hilbert fit could not validate on the given sample window
  internal,          // invariant breakage
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tightclose

#endif
