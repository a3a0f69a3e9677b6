#include "tlpp/high_precision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tlpp/error.hpp"
#include "tlpp/qpowers.hpp"

namespace tlpp {

namespace {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

// Falling factorial n(n-1)...(n-d+1).
std::uint64_t falling(std::uint64_t n, int d) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) r *= (n >= static_cast<std::uint64_t>(i) ? n - i : 0);
  return r;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : saved_digits10_(BigFloat::default_precision()) {
  BigFloat::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_digits10_); }

BigFloat to_big_float(const Rational& r, unsigned precision_bits) {
  PrecisionScope scope(precision_bits);
  return BigFloat(r.raw().get_mpq_t());
}

int HighPrecisionValue::justified_digits() const {
  const int max_digits = static_cast<int>(bits_to_digits10(precision_bits)) - 1;
  const double magnitude = std::fabs(to_double());
  if (error_bound <= 0.0) return max_digits;
  if (magnitude == 0.0) return 1;
  const int digits = static_cast<int>(std::floor(std::log10(magnitude / error_bound)));
  return std::clamp(digits, 1, max_digits);
}

std::string HighPrecisionValue::str() const {
  return value.str(justified_digits(), std::ios_base::fmtflags(0));
}

std::string HighPrecisionValue::serialize() const {
  std::ostringstream os;
  os.precision(3);
  os << str() << "±" << error_bound;
  return os.str();
}

HighPrecisionValue b_series_at_one(const Rational& q, int derivative_order, double tol,
                                   unsigned precision_bits) {
  if (q.sign() < 0 || q >= Rational(1)) {
    throw DomainError("b_series_at_one requires 0 <= q < 1, got q = " + q.str());
  }
  if (derivative_order < 0 || derivative_order > 2) {
    throw DomainError("derivative order must be 0, 1 or 2");
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  const double qd = q.to_double();
  Rational sum(0);
  Rational q_power(1);  // q^{C(n+1,2)}
  Rational q_to_n1 = q;  // q^{n+1}
  double tail = 0.0;
  for (std::uint64_t n = 0;; ++n) {
    const std::uint64_t weight = falling(n, derivative_order);
    const double term = static_cast<double>(weight) * q_power.to_double();
    if (n > static_cast<std::uint64_t>(derivative_order)) {
      // For m >= n the ratio of consecutive terms is at most
      // (n+1)/(n+1-d) * q^{n+1}, which decreases in m.
      const double ratio = static_cast<double>(n + 1) /
                           static_cast<double>(n + 1 - derivative_order) *
                           std::pow(qd, static_cast<double>(n + 1));
      if (term < tol && ratio < 1.0) {
        tail = term / (1.0 - ratio);
        break;
      }
    }
    if (weight != 0) sum += Rational(static_cast<long>(weight)) * q_power;
    q_power *= q_to_n1;  // C(n+2,2) = C(n+1,2) + n + 1
    q_to_n1 *= q;
  }

  HighPrecisionValue out;
  out.precision_bits = precision_bits;
  out.value = to_big_float(sum, precision_bits);
  const double rounding = std::fabs(sum.to_double()) * std::ldexp(1.0, 1 - static_cast<int>(precision_bits));
  out.error_bound = tail + rounding;
  return out;
}

}  // namespace tlpp
