#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tlpp/rational.hpp"

namespace tlpp {

/// k(k-1)/2.
constexpr std::uint64_t binomial2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

/// q^{k(k-1)/2}, computed by direct exponentiation. 0^0 = 1.
Rational q_triangular_power(const Rational& q, std::uint64_t k);

/// Immutable table of q^{C(k,2)} for k = 0..k_max+1.
///
/// Built incrementally (q^{C(k+1,2)} = q^{C(k,2)} * q^k), so the cost is
/// k_max multiplications instead of k_max exponentiations.
class QPowers {
 public:
  QPowers(Rational q, std::size_t k_max);

  const Rational& q() const { return q_; }
  std::size_t k_max() const { return k_max_; }

  /// q^{C(k,2)}; coefficient k of A_p.
  const Rational& triangular(std::size_t k) const;
  /// q^{C(k+1,2)}; coefficient k of B_p.
  const Rational& shifted(std::size_t k) const { return triangular(k + 1); }

 private:
  Rational q_;
  std::size_t k_max_;
  std::vector<Rational> table_;  // table_[k] = q^{C(k,2)}, k <= k_max + 1
};

}  // namespace tlpp
