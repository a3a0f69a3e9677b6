#pragma once

// Limit constants of X_n from the values of B_p and its first two
// derivatives at x = 1, the finite-n variance slope, and Monte Carlo CLT
// diagnostics.
//
// Weights are nonnegative, so the positive part X_n^+ is X_n itself and
// needs no separate treatment.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tlpp/high_precision.hpp"
#include "tlpp/rational.hpp"

namespace tlpp {

inline constexpr double kDefaultTolerance = 1e-15;

/// Candidate closed forms for lim var(X_n)/(n-1), with b = B_p(1) and
/// b1 = B_p'(1):
///   kRederived:      b^-2 (1 + 2 b1/b - b)
///   kSixTerm:        b^-2 (1 + 6 b1/b - b)
///   kInverseCube:    b^-2 (1 - 2 b1/b^3)
/// Only kRederived agrees with the exact variance slope (see README).
enum class VarianceFormula { kRederived, kSixTerm, kInverseCube };

std::string_view variance_formula_name(VarianceFormula f);
/// "rederived", "six-term", "inverse-cube"; throws DomainError otherwise.
VarianceFormula parse_variance_formula(std::string_view name);

struct LimitConstants {
  Rational p;
  VarianceFormula formula = VarianceFormula::kRederived;
  HighPrecisionValue beta;
  HighPrecisionValue sigma_w;
  HighPrecisionValue b1;         // B_p(1)
  HighPrecisionValue b1_prime;   // B_p'(1)
  HighPrecisionValue b1_second;  // B_p''(1)
  // Principal parts at x = 1 of 1/((1-x)^2 B(x)) = c2 (x-1)^-2 + c1 (x-1)^-1 + ...
  // and 1/((1-x)^3 B(x)^2) = d3 (x-1)^-3 + d2 (x-1)^-2 + d1 (x-1)^-1 + ...
  HighPrecisionValue c2, c1;
  HighPrecisionValue d3, d2, d1;
};

/// All constants for 0 < p <= 1.
LimitConstants limit_constants(const Rational& p, double tol = kDefaultTolerance,
                               VarianceFormula formula = VarianceFormula::kRederived);

/// 1 / B_p(1); rejects p = 0.
HighPrecisionValue beta_tr(const Rational& p, double tol = kDefaultTolerance);

/// Square root of the chosen variance formula; rejects p = 0 and a radicand
/// that is negative beyond its error bound.
HighPrecisionValue sigma_w(const Rational& p, double tol = kDefaultTolerance,
                           VarianceFormula formula = VarianceFormula::kRederived);

/// var(X_n)/(n-1) from the moment recurrence: exact rationals for
/// n <= exact_threshold, doubles above. Requires n >= 2.
double variance_slope(std::size_t n, const Rational& p, std::size_t exact_threshold = 64);

struct CltSummary {
  std::size_t n = 0;
  Rational p;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  unsigned worker_count = 1;
  VarianceFormula formula = VarianceFormula::kRederived;
  double beta = 0.0;
  double sigma = 0.0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
  double kolmogorov = 0.0;  // sup_x |F_count(x) - Phi(x)|
};

/// Standardizes count samples of X_n as (X_n - beta (n-1)) / (sigma sqrt(n-1))
/// and summarizes them. Requires n >= 2, count >= 2 and 0 < p < 1.
CltSummary clt_diagnostic(std::size_t n, const Rational& p, std::uint64_t count,
                          std::uint64_t seed, unsigned workers = 1,
                          VarianceFormula formula = VarianceFormula::kRederived);

/// Sup distance between the empirical CDF of `values` and Phi, checked on
/// both sides of every jump.
double kolmogorov_statistic(std::vector<double> values);

struct IncrementCovariance {
  std::size_t n = 0;
  std::size_t split = 0;
  std::uint64_t sample_count = 0;
  double covariance = 0.0;   // cov(X_split, X_n - X_split)
  double correlation = 0.0;
};

/// Covariance of the heaviest-path weight to node `split` (1-based node
/// count of the first window) and the increment from there to node n, from
/// the same sampler substreams as sample().
IncrementCovariance increment_covariance(std::size_t n, std::size_t split, const Rational& p,
                                         std::uint64_t count, std::uint64_t seed);

}  // namespace tlpp
