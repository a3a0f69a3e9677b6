#pragma once

// Ground truth for X_n: explicit weight assignments, the O(n^2) heaviest-path
// DP, exhaustive enumeration for small n, and a reproducible Monte Carlo
// sampler.
//
// Nodes are 0-based here: node k in code is node k+1 on the tournament
// 1..n, so X_n is the heaviest path from node 0 to node n-1.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tlpp/kernels.hpp"
#include "tlpp/philox.hpp"
#include "tlpp/rational.hpp"
#include "tlpp/recurrence.hpp"

namespace tlpp {

/// Packed 0/1 edge weights of a transitive tournament on n nodes.
///
/// Edge (i, j), i < j, lives at bit i*(2n-i-1)/2 + (j-i-1): row-major over
/// i, then j. Row i therefore occupies the contiguous bit range holding the
/// edges (i, i+1), ..., (i, n-1).
class WeightAssignment {
 public:
  explicit WeightAssignment(std::size_t n);

  /// Bits of `mask` in pairing order; requires C(n,2) <= 64.
  static WeightAssignment from_mask(std::size_t n, std::uint64_t mask);

  static std::size_t edge_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
  static std::size_t edge_index(std::size_t n, std::size_t i, std::size_t j);

  std::size_t nodes() const { return n_; }
  std::size_t edge_count() const { return edge_count(n_); }

  bool bit(std::size_t index) const { return (words_[index / 64] >> (index % 64)) & 1U; }
  void set_bit(std::size_t index, bool value);
  bool weight(std::size_t i, std::size_t j) const { return bit(edge_index(n_, i, j)); }
  void set_weight(std::size_t i, std::size_t j, bool value) { set_bit(edge_index(n_, i, j), value); }

  /// Number of weight-1 edges.
  std::size_t ones() const;

  /// Weights of (i, i+1), ..., (i, n-1) as bytes; out.size() == n-1-i.
  void row(std::size_t i, std::span<std::uint8_t> out) const;

  /// Sub-tournament on nodes first, ..., first+count-1 (relabelled from 0).
  WeightAssignment window(std::size_t first, std::size_t count) const;
  WeightAssignment prefix(std::size_t count) const { return window(0, count); }

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// best[j] = max_{i<j} (best[i] + w(i,j)), best[0] = 0; returns the full
/// vector, so best[j] is the heaviest path weight from node 0 to node j.
std::vector<std::int32_t> heaviest_path_profile(const WeightAssignment& w);

/// X_n for the assignment (0 for a single node).
std::int32_t heaviest_path(const WeightAssignment& w);

inline constexpr std::size_t kBruteForceMaxNodes = 8;

/// Number of assignments for each (X_n, number of weight-1 edges); one
/// enumeration serves every p.
struct BruteForceTally {
  std::size_t n = 1;
  /// counts[x][k]
  std::vector<std::vector<std::uint64_t>> counts;

  WeightDistribution distribution(const Rational& p) const;
};

/// Exhaustive over all 2^{C(n,2)} assignments; n <= 8 (n = 8 takes seconds).
const BruteForceTally& brute_force_tally(std::size_t n);
WeightDistribution brute_force_distribution(std::size_t n, const Rational& p);

/// Exact Bernoulli parameters for p = a/b; requires b < 2^32.
kernels::BernoulliParams bernoulli_params(const Rational& p);

/// One exact Bernoulli draw (rejection loop on the scalar path).
bool draw_bernoulli(PhiloxStream& stream, const kernels::BernoulliParams& params);

/// Row-major draw of every edge, C(n,2) Bernoulli outcomes.
WeightAssignment random_assignment(std::size_t n, const kernels::BernoulliParams& params,
                                   PhiloxStream& stream);

/// Column-at-a-time sampler of X_n that never materializes the assignment:
/// the weights into node j are drawn, folded into best[j], and discarded.
class PathSampler {
 public:
  PathSampler(std::size_t n, const Rational& p);

  std::size_t nodes() const { return n_; }

  /// Draws one realization; returns X_n.
  std::int32_t draw(PhiloxStream& stream);

  /// Heaviest path weights from node 0 to every node of the last draw.
  std::span<const std::int32_t> profile() const { return best_; }

 private:
  std::size_t n_;
  kernels::BernoulliParams params_;
  const kernels::KernelTable* kernels_;
  std::vector<std::int32_t> best_;
  std::vector<std::uint32_t> uniforms_;
  std::vector<std::uint8_t> weights_;
};

/// Philox counter domains; a sample's substream is (seed, domain, index).
enum class StreamDomain : std::uint32_t { kSample = 0, kCoupling = 1 };

struct SampleOptions {
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct SampleReport {
  std::size_t n = 0;
  Rational p;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  unsigned worker_count = 1;
  std::uint64_t weight_sum = 0;
  std::uint64_t weight_square_sum = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single sample
  double standard_error = 0.0;
  double normalized_mean = 0.0;  // mean / (n-1); 0 when n == 1

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/// Monte Carlo estimate of E[X_n] and var(X_n).
///
/// Sample s (0-based) always uses substream (seed, kSample, s), and worker k
/// of W handles samples [k*count/W, (k+1)*count/W). Workers only produce
/// integer sums that are added after the join, so every field except
/// worker_count is independent of the worker count.
SampleReport sample(std::size_t n, const Rational& p, const SampleOptions& options);

/// X_n for every sample, in sample order; same substreams as sample().
std::vector<std::int32_t> sample_values(std::size_t n, const Rational& p,
                                        const SampleOptions& options);

SampleReport summarize(std::size_t n, const Rational& p, const SampleOptions& options,
                       std::span<const std::int32_t> values);

struct IncrementCheck {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double fraction() const {
    return samples == 0 ? 0.0 : static_cast<double>(violations) / static_cast<double>(samples);
  }
};

/// Draws assignments on n+1 nodes and counts realizations where
/// X_{n+1} - X_n (same assignment, first n nodes) falls outside {0, 1}.
IncrementCheck coupled_increment_check(std::size_t n, const Rational& p, std::uint64_t count,
                                       std::uint64_t seed);

}  // namespace tlpp
