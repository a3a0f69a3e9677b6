#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "tlpp/rational.hpp"

namespace tlpp {

using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Floating approximation together with an absolute bound on its
/// truncation-plus-rounding error.
struct HighPrecisionValue {
  BigFloat value;
  double error_bound = 0.0;
  unsigned precision_bits = kDefaultPrecisionBits;

  double to_double() const { return value.convert_to<double>(); }

  /// Significant decimal digits the error bound supports (at least 1).
  int justified_digits() const;

  /// Value printed with justified_digits() significant digits.
  std::string str() const;

  /// "<value>±<error_bound>".
  std::string serialize() const;
};

/// Sets the MPFR working precision of the calling thread for the lifetime
/// of the guard.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

BigFloat to_big_float(const Rational& r, unsigned precision_bits);

/// Order-d derivative of B_p(x) = sum_{n>=0} q^{C(n+1,2)} x^n at x = 1:
/// sum_n n^{(d)} q^{C(n+1,2)}, where n^{(d)} is 1, n, n(n-1) for d = 0, 1, 2.
///
/// Terms are summed exactly as rationals until the first term below `tol`
/// (once the term ratio is provably below one); the tail and the final
/// rounding are folded into error_bound. Requires 0 <= q < 1.
HighPrecisionValue b_series_at_one(const Rational& q, int derivative_order, double tol,
                                   unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace tlpp
