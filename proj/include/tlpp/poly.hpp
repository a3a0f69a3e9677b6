#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tlpp/rational.hpp"

namespace tlpp {

/// Polynomial in the generating-function indeterminate t with exact
/// coefficients; coeffs()[k] is the coefficient of t^k. Trailing zero
/// coefficients are trimmed, so equality is structural. The zero
/// polynomial has no coefficients.
class PolyInT {
 public:
  PolyInT() = default;
  explicit PolyInT(std::vector<Rational> coeffs);
  static PolyInT constant(Rational c);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k (zero beyond the degree).
  Rational operator[](std::size_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& t) const;
  PolyInT derivative() const;
  /// t * P(t).
  PolyInT times_t() const;
  /// Drops every coefficient of t^k with k > max_degree.
  PolyInT truncated(std::size_t max_degree) const;

  PolyInT& operator+=(const PolyInT& rhs);
  PolyInT& operator-=(const PolyInT& rhs);
  PolyInT& operator*=(const Rational& scalar);
  friend PolyInT operator+(PolyInT a, const PolyInT& b) { return a += b; }
  friend PolyInT operator-(PolyInT a, const PolyInT& b) { return a -= b; }
  friend PolyInT operator*(PolyInT a, const Rational& s) { return a *= s; }
  friend PolyInT operator*(const PolyInT& a, const PolyInT& b);
  friend bool operator==(const PolyInT& a, const PolyInT& b) = default;

  /// "1/8 + 5/8 t + 1/4 t^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace tlpp
