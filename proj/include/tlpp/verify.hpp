#pragma once

// Cross-oracle suite: every exact route to E[X_n] and the law of X_n is
// compared against the others for small n.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tlpp/rational.hpp"

namespace tlpp {

/// Test hook: perturbs one coefficient produced by the named route before it
/// is compared, so a working suite must report a mismatch.
enum class FaultRoute {
  kNone,
  kExpected,      // conditioning recurrence for E[X_n]
  kPgf,           // PGF recurrence
  kMoments,       // moment recurrence
  kSeriesG,       // [x^n] G_p
  kSeriesZ,       // [x^n] Z(x,t)
  kCompositions,  // composition sums
  kBruteForce,    // exhaustive enumeration
  kSeriesA,       // A_p in the identity 1 + x B_p = A_p
};

FaultRoute parse_fault_route(std::string_view name);
std::vector<std::string_view> fault_route_names();

struct VerifyOptions {
  std::size_t n_max = 6;
  std::vector<Rational> probabilities{Rational(1, 2), Rational(1, 3), Rational(3, 4)};
  FaultRoute fault = FaultRoute::kNone;
};

struct CheckResult {
  std::string name;
  Rational p;
  bool passed = true;
  std::size_t comparisons = 0;
  std::string detail;  // first mismatch, empty when passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
};

/// Brute force is limited to n <= 7 whatever n_max is.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace tlpp
