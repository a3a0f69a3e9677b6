#pragma once

#include <cstddef>
#include <vector>

#include "tlpp/poly.hpp"
#include "tlpp/rational.hpp"

namespace tlpp {

/// Power series in x known up to and including x^order.
class TruncatedSeries {
 public:
  /// coeffs.size() - 1 becomes the order; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);
  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t j) const { return coeffs_.at(j); }

  TruncatedSeries truncated(std::size_t order) const;
  /// x * S(x), keeping the order (the top coefficient falls off).
  TruncatedSeries times_x() const;

  // Binary operations return a series of order min(lhs.order, rhs.order).
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Z(x,t) known up to x^order; coeffs()[n] = [x^n] Z, a polynomial in t.
class BivariateSeries {
 public:
  explicit BivariateSeries(std::vector<PolyInT> coeffs);
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<PolyInT>& coeffs() const { return coeffs_; }
  const PolyInT& operator[](std::size_t n) const { return coeffs_.at(n); }

 private:
  std::vector<PolyInT> coeffs_;
};

/// A_p(x) = sum q^{C(n,2)} x^n.
TruncatedSeries series_A(const Rational& q, std::size_t order);
/// B_p(x) = sum q^{C(n+1,2)} x^n.
TruncatedSeries series_B(const Rational& q, std::size_t order);

/// 1/S up to the order of S. Throws DomainError for a zero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// H_p = 1/B_p.
TruncatedSeries series_H(const Rational& q, std::size_t order);

/// G_p(x) = 1 + x / ((1-x)^2 B_p(x)); [x^n] G_p = 1 + E[X_n].
TruncatedSeries series_G(const Rational& q, std::size_t order);

/// Z(x,t) = 1 + x B_p(x) / (1 - t (A_p(x) - B_p(x))), expanded as the
/// geometric series sum_k t^k D(x)^k with D = A_p - B_p. Since D = O(x), the
/// coefficient of x^n has t-degree below n.
BivariateSeries series_Z(const Rational& q, std::size_t order);

}  // namespace tlpp
