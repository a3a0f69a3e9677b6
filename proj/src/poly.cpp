#include "tlpp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace tlpp {

PolyInT::PolyInT(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyInT PolyInT::constant(Rational c) { return PolyInT(std::vector<Rational>{std::move(c)}); }

void PolyInT::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational PolyInT::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational PolyInT::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

PolyInT PolyInT::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  }
  return PolyInT(std::move(out));
}

PolyInT PolyInT::times_t() const {
  if (is_zero()) return {};
  std::vector<Rational> out;
  out.reserve(coeffs_.size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return PolyInT(std::move(out));
}

PolyInT PolyInT::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return PolyInT(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

PolyInT& PolyInT::operator+=(const PolyInT& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

PolyInT& PolyInT::operator-=(const PolyInT& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

PolyInT& PolyInT::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

PolyInT operator*(const PolyInT& a, const PolyInT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyInT(std::move(out));
}

std::string PolyInT::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k == 1) os << " t";
    if (k > 1) os << " t^" << k;
  }
  return os.str();
}

}  // namespace tlpp
