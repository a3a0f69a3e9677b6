#pragma once

// Closed-form coefficient sums over integer compositions. A composition of m
// is an ordered tuple of positive integers summing to m; there are 2^{m-1} of
// them (one per subset of the m-1 gaps between units), and the empty tuple is
// the single composition of 0.
//
//   h_m  = [x^m] 1/B_p(x) = sum_{a composition of m} (-1)^{len a} q^{sum C(a_i+1,2)}
//   g(n) = sum_{m=0}^{n-1} (n-m) h_m
//
// Both are exponential in m and exist as an independent check on the series
// and recurrence routes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "tlpp/rational.hpp"

namespace tlpp {

inline constexpr unsigned kDefaultCompositionLimit = 24;

class Composition {
 public:
  /// Throws DomainError if any part is zero.
  explicit Composition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned target() const { return target_; }
  std::size_t length() const { return parts_.size(); }
  /// sum_i C(a_i + 1, 2).
  std::uint64_t weight_exponent() const;

 private:
  std::vector<unsigned> parts_;
  unsigned target_ = 0;
};

/// Calls visit once per composition of m, in cut-mask order. Throws
/// DomainError when m exceeds `limit`.
void for_each_composition(unsigned m, const std::function<void(const Composition&)>& visit,
                          unsigned limit = kDefaultCompositionLimit);

/// 2^{m-1} for m >= 1, 1 for m = 0.
std::uint64_t composition_count(unsigned m);

Rational h_by_compositions(unsigned m, const Rational& q, unsigned limit = kDefaultCompositionLimit);

/// g(n) = 1 + E[X_n]; g(0) = 1 by the constant term of G_p. Uses compositions
/// of up to n-1, so `limit` caps n-1.
Rational g_by_compositions(unsigned n, const Rational& q, unsigned limit = kDefaultCompositionLimit);

/// g(n) as the triple sum sum_{m<n} sum_{j<=m} sum_{k<=j} (-1)^k sum_{a in C_{j,k}} q^{...}.
Rational g_by_triangular_sum(unsigned n, const Rational& q,
                             unsigned limit = kDefaultCompositionLimit);

}  // namespace tlpp
