#ifndef TIGHTCLOSE_VERIFY_HPP
#define TIGHTCLOSE_VERIFY_HPP

#include <string>
#include <vector>

#include "intmath.hpp"

namespace tightclose {

struct CheckResult {
  std::string suite;
  std::string instance;
  bool pass;
  std::string detail;  // optional failure/context information
};

struct VerifyConfig {
  std::vector<std::string> suites;  // empty or {"all"}: every suite
  u64 n_lo = 2, n_hi = 4;           // diagonal exponent N range
  u64 e_lo = 1, e_hi = 2;           // Frobenius exponent range (q = p^e)
  u64 k_lo = 1, k_hi = 3;           // bracket/closure power range
  u64 d_lo = 1, d_hi = 6;           // binomial identity d range
  u64 bin_k_lo = 1, bin_k_hi = 6;   // binomial identity k range
  u64 bin_n_lo = 0, bin_n_hi = 12;  // binomial identity n range
  u64 n_max = 4;                    // window for intersection/HI_p style checks
  u64 e_max = 2;                    // membership probe depth
  u64 p_override = 0;               // 0: pick the default admissible p per N
  u64 sr_p = 101;                   // characteristic for Stanley-Reisner checks
  u64 seed = 0;
  u64 s_max = 3;
  u64 trials = 8;
  unsigned jobs = 1;
};

// Default admissible characteristic for a diagonal exponent: 7 when 5 | N or
// N = 5-free conflicts, else 5 (p must not divide N).
u64 default_prime_for(u64 n);

std::vector<std::string> verify_suite_names();

// Runs the requested suites (concurrently up to config.jobs) and returns the
// results sorted by (suite, instance).
std::vector<CheckResult> run_verify(const VerifyConfig& config);

}  // namespace tightclose

#endif
