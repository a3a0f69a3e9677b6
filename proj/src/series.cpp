#include "tlpp/series.hpp"

#include <algorithm>

#include "tlpp/error.hpp"
#include "tlpp/qpowers.hpp"

namespace tlpp {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  auto s = zero(order);
  s.coeffs_[0] = Rational(1);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::times_x() const {
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end() - 1, out.begin() + 1);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> out(order + 1);
  for (std::size_t j = 0; j <= order; ++j) out[j] = a.coeffs_[j] + b.coeffs_[j];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> out(order + 1);
  for (std::size_t j = 0; j <= order; ++j) out[j] = a.coeffs_[j] - b.coeffs_[j];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

BivariateSeries::BivariateSeries(std::vector<PolyInT> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a bivariate series needs at least one coefficient");
}

TruncatedSeries series_A(const Rational& q, std::size_t order) {
  const QPowers powers(q, order);
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(powers.triangular(n));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_B(const Rational& q, std::size_t order) {
  const QPowers powers(q, order);
  std::vector<Rational> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(powers.shifted(n));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (s[0].is_zero()) throw DomainError("reciprocal of a series with zero constant term");
  const std::size_t order = s.order();
  const Rational inv0 = Rational(1) / s[0];
  std::vector<Rational> r(order + 1, Rational(0));
  r[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (!s[k].is_zero()) acc += s[k] * r[n - k];
    }
    r[n] = -(acc * inv0);
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_H(const Rational& q, std::size_t order) {
  return reciprocal(series_B(q, order));
}

TruncatedSeries series_G(const Rational& q, std::size_t order) {
  const TruncatedSeries h = series_H(q, order);
  // x / (1-x)^2 = sum_{j>=1} j x^j, convolved with H.
  std::vector<Rational> g(order + 1, Rational(0));
  g[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t j = 1; j <= n; ++j) acc += Rational(static_cast<long>(j)) * h[n - j];
    g[n] += acc;
  }
  return TruncatedSeries(std::move(g));
}

BivariateSeries series_Z(const Rational& q, std::size_t order) {
  std::vector<PolyInT> z(order + 1);
  z[0] = PolyInT::constant(Rational(1));
  if (order == 0) return BivariateSeries(std::move(z));

  // Only x^0..x^{order-1} of B * sum_k t^k D^k are needed.
  const std::size_t inner = order - 1;
  const TruncatedSeries b = series_B(q, inner);
  const TruncatedSeries d = series_A(q, inner) - b;

  // geometric[m] = [x^m] sum_k t^k D^k; D^k = O(x^k) so k <= m suffices.
  std::vector<std::vector<Rational>> geometric(inner + 1);
  for (std::size_t m = 0; m <= inner; ++m) geometric[m].assign(m + 1, Rational(0));
  TruncatedSeries power = TruncatedSeries::one(inner);
  for (std::size_t k = 0; k <= inner; ++k) {
    for (std::size_t m = k; m <= inner; ++m) geometric[m][k] += power[m];
    if (k < inner) power = power * d;
  }

  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t m_top = n - 1;
    std::vector<Rational> coeffs(m_top + 1, Rational(0));
    for (std::size_t j = 0; j <= m_top; ++j) {
      const Rational& bj = b[j];
      if (bj.is_zero()) continue;
      const auto& g = geometric[m_top - j];
      for (std::size_t k = 0; k < g.size(); ++k) coeffs[k] += bj * g[k];
    }
    z[n] = PolyInT(std::move(coeffs));
  }
  return BivariateSeries(std::move(z));
}

}  // namespace tlpp
