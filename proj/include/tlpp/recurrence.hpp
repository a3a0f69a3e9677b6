#pragma once

// Exact law of X_n, the heaviest-path weight on the transitive tournament
// with n nodes and i.i.d. Bernoulli(p) edge weights.
//
// Everything here follows from conditioning on the first node i at which a
// heaviest path from node 1 picks up weight: the first i-1 nodes carry an
// all-zero sub-tournament (probability q^{C(i-1,2)}), some edge into node i
// has weight 1 (probability 1 - q^{i-1}), and the remainder is an
// independent copy of X_{n-i+1}. With c_i = q^{C(i,2)} - q^{C(i+1,2)}:
//
//   E[t^{X_n}] = t * sum_{i=1}^{n-1} c_i E[t^{X_{n-i}}] + q^{C(n,2)}.

#include <cstddef>
#include <memory>
#include <vector>

#include "tlpp/poly.hpp"
#include "tlpp/rational.hpp"

namespace tlpp {

/// Exact probability vector of X_n over {0, ..., n-1}.
struct WeightDistribution {
  std::size_t n = 1;
  std::vector<Rational> probs;

  Rational mean() const;
  Rational second_moment() const;
  Rational total() const;

  /// Throws ConsistencyError naming the first violated invariant:
  /// probs.size() == n, probs >= 0, sum == 1, probs[0] == q^{C(n,2)},
  /// probs[n-1] == p^{n-1}.
  void check_invariants(const Rational& p) const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// m1[n] = E[X_n], m2[n] = E[X_n^2] for n = 0..n_max (entry 0 is stored as 0).
struct MomentTable {
  std::size_t n_max = 0;
  std::vector<Rational> m1;
  std::vector<Rational> m2;

  Rational variance(std::size_t n) const { return m2.at(n) - m1.at(n) * m1.at(n); }
};

struct FloatMoments {
  std::size_t n_max = 0;
  std::vector<double> m1;
  std::vector<double> m2;

  double variance(std::size_t n) const { return m2.at(n) - m1.at(n) * m1.at(n); }
};

/// Immutable bottom-up tables for one (p, n_max).
struct ExactTables {
  Rational p;
  std::size_t n_max = 0;
  /// step[i] = c_i = q^{C(i,2)} - q^{C(i+1,2)}, i = 1..n_max (step[0] unused, 0).
  std::vector<Rational> step;
  /// expected[n] = f(n) via the conditioning recurrence in its direct
  /// form: f(n) = sum_{i=2}^n (1 - q^{i-1}) q^{C(i-1,2)} (f(n-i+1) + 1).
  std::vector<Rational> expected;
  /// First two moments via the PGF recurrence differentiated at t = 1.
  MomentTable moments;
};

/// Cached per p; a request for a larger n_max rebuilds and replaces the entry.
std::shared_ptr<const ExactTables> exact_tables(const Rational& p, std::size_t n_max);

/// E[t^{X_n}] for n = 1..n_max (entry 0 is the constant 1, matching Z(x,t)'s
/// constant term). Cached per p like exact_tables.
std::shared_ptr<const std::vector<PolyInT>> pgf_table(const Rational& p, std::size_t n_max);

Rational expected_weight(std::size_t n, const Rational& p);
PolyInT pgf(std::size_t n, const Rational& p);
WeightDistribution distribution(std::size_t n, const Rational& p);
MomentTable moments(std::size_t n_max, const Rational& p);

/// Same moment recurrence in double precision; usable far beyond the range
/// where exact rationals stay cheap.
FloatMoments moments_float(std::size_t n_max, const Rational& p);

/// Drops all cached tables (tests and benchmarks).
void clear_recurrence_cache();

}  // namespace tlpp
