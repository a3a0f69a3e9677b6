#include "tlpp/percolation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "tlpp/error.hpp"

namespace tlpp {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

// ---------------------------------------------------------------------------
// WeightAssignment

WeightAssignment::WeightAssignment(std::size_t n) : n_(n), words_((edge_count(n) + 63) / 64, 0) {
  if (n < 1) throw DomainError("a tournament needs at least one node");
}

WeightAssignment WeightAssignment::from_mask(std::size_t n, std::uint64_t mask) {
  WeightAssignment w(n);
  if (w.edge_count() > 64) throw DomainError("from_mask supports at most 64 edges");
  if (!w.words_.empty()) {
    const std::size_t e = w.edge_count();
    w.words_[0] = e == 64 ? mask : (mask & ((std::uint64_t{1} << e) - 1));
  }
  return w;
}

std::size_t WeightAssignment::edge_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) {
    throw DomainError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") is not an edge of the tournament on " + std::to_string(n) + " nodes");
  }
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

void WeightAssignment::set_bit(std::size_t index, bool value) {
  const std::uint64_t m = std::uint64_t{1} << (index % 64);
  if (value) {
    words_[index / 64] |= m;
  } else {
    words_[index / 64] &= ~m;
  }
}

std::size_t WeightAssignment::ones() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void WeightAssignment::row(std::size_t i, std::span<std::uint8_t> out) const {
  const std::size_t start = i * (2 * n_ - i - 1) / 2;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = bit(start + k) ? 1 : 0;
}

WeightAssignment WeightAssignment::window(std::size_t first, std::size_t count) const {
  if (count < 1 || first + count > n_) throw DomainError("window outside the tournament");
  WeightAssignment w(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) w.set_weight(i, j, weight(first + i, first + j));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Heaviest path

std::vector<std::int32_t> heaviest_path_profile(const WeightAssignment& w) {
  const std::size_t n = w.nodes();
  const auto& k = kernels::active_kernels();
  // Nodes are final once every predecessor has pushed into them, so a
  // forward sweep over contiguous rows computes the same max as the
  // column-wise recurrence. Unreached entries start below any path weight.
  std::vector<std::int32_t> best(n, -1);
  best[0] = 0;
  std::vector<std::uint8_t> row(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t len = n - 1 - i;
    w.row(i, std::span(row.data(), len));
    k.relax_row(best[i], std::span<const std::uint8_t>(row.data(), len),
                std::span(best.data() + i + 1, len));
  }
  return best;
}

std::int32_t heaviest_path(const WeightAssignment& w) { return heaviest_path_profile(w).back(); }

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace {

struct Enumerator {
  std::size_t n;
  std::array<std::int32_t, kBruteForceMaxNodes> best{};
  std::vector<std::vector<std::uint64_t>>* counts;

  // Column j holds the j edges (i, j), i < j, as the bits of `pattern`.
  void column(std::size_t j, std::size_t ones) {
    if (j == n) {
      (*counts)[static_cast<std::size_t>(best[n - 1])][ones] += 1;
      return;
    }
    const std::uint32_t patterns = std::uint32_t{1} << j;
    for (std::uint32_t pattern = 0; pattern < patterns; ++pattern) {
      std::int32_t m = 0;
      for (std::size_t i = 0; i < j; ++i) {
        m = std::max(m, best[i] + static_cast<std::int32_t>((pattern >> i) & 1U));
      }
      best[j] = m;
      column(j + 1, ones + static_cast<std::size_t>(std::popcount(pattern)));
    }
  }
};

BruteForceTally enumerate_all(std::size_t n) {
  BruteForceTally t;
  t.n = n;
  t.counts.assign(n, std::vector<std::uint64_t>(WeightAssignment::edge_count(n) + 1, 0));
  Enumerator e{n, {}, &t.counts};
  e.best[0] = 0;
  e.column(1, 0);
  return t;
}

}  // namespace

WeightDistribution BruteForceTally::distribution(const Rational& p) const {
  require_probability(p);
  const Rational q = Rational(1) - p;
  const std::size_t edges = WeightAssignment::edge_count(n);
  WeightDistribution d;
  d.n = n;
  d.probs.assign(n, Rational(0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k <= edges; ++k) {
      if (counts[x][k] == 0) continue;
      d.probs[x] += Rational(static_cast<long>(counts[x][k])) * pow(p, k) * pow(q, edges - k);
    }
  }
  return d;
}

const BruteForceTally& brute_force_tally(std::size_t n) {
  if (n < 1 || n > kBruteForceMaxNodes) {
    throw DomainError("brute force enumeration supports 1 <= n <= " +
                      std::to_string(kBruteForceMaxNodes) + ", got " + std::to_string(n));
  }
  static std::array<std::once_flag, kBruteForceMaxNodes + 1> once;
  static std::array<std::optional<BruteForceTally>, kBruteForceMaxNodes + 1> tallies;
  std::call_once(once[n], [n] { tallies[n] = enumerate_all(n); });
  return *tallies[n];
}

WeightDistribution brute_force_distribution(std::size_t n, const Rational& p) {
  require_probability(p);
  return brute_force_tally(n).distribution(p);
}

// ---------------------------------------------------------------------------
// Sampling

kernels::BernoulliParams bernoulli_params(const Rational& p) {
  require_probability(p);
  const mpz_class num = p.numerator();
  const mpz_class den = p.denominator();
  if (den > mpz_class(0xffffffffUL)) {
    throw DomainError("sampling needs a denominator below 2^32, got p = " + p.str());
  }
  return kernels::BernoulliParams::make(static_cast<std::uint32_t>(num.get_ui()),
                                        static_cast<std::uint32_t>(den.get_ui()));
}

bool draw_bernoulli(PhiloxStream& stream, const kernels::BernoulliParams& params) {
  for (;;) {
    const std::uint64_t m = std::uint64_t{stream.next()} * params.denominator;
    if (static_cast<std::uint32_t>(m) >= params.reject_below) {
      return static_cast<std::uint32_t>(m >> 32) < params.numerator;
    }
  }
}

namespace {

// Bulk Bernoulli draws: one uniform per lane, then rejected lanes are redrawn
// one at a time in index order.
void draw_bernoulli_block(PhiloxStream& stream, const kernels::BernoulliParams& params,
                          const kernels::KernelTable& k, std::span<std::uint32_t> uniforms,
                          std::span<std::uint8_t> out) {
  stream.fill(uniforms);
  const std::size_t rejected = k.bernoulli_from_uniforms(uniforms, params, out);
  if (rejected == 0) return;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == kernels::kRejected) out[i] = draw_bernoulli(stream, params) ? 1 : 0;
  }
}

}  // namespace

WeightAssignment random_assignment(std::size_t n, const kernels::BernoulliParams& params,
                                   PhiloxStream& stream) {
  WeightAssignment w(n);
  const std::size_t e = w.edge_count();
  std::vector<std::uint32_t> uniforms(e);
  std::vector<std::uint8_t> bits(e);
  draw_bernoulli_block(stream, params, kernels::active_kernels(), uniforms, bits);
  for (std::size_t i = 0; i < e; ++i) {
    if (bits[i] != 0) w.set_bit(i, true);
  }
  return w;
}

PathSampler::PathSampler(std::size_t n, const Rational& p)
    : n_(n),
      params_(bernoulli_params(p)),
      kernels_(&kernels::active_kernels()),
      best_(n, 0),
      uniforms_(n),
      weights_(n) {
  if (n < 1) throw DomainError("sampling needs n >= 1");
}

std::int32_t PathSampler::draw(PhiloxStream& stream) {
  best_[0] = 0;
  for (std::size_t j = 1; j < n_; ++j) {
    const std::span<std::uint8_t> w(weights_.data(), j);
    draw_bernoulli_block(stream, params_, *kernels_, std::span(uniforms_.data(), j), w);
    best_[j] = kernels_->column_max(std::span<const std::int32_t>(best_.data(), j),
                                    std::span<const std::uint8_t>(w.data(), j));
  }
  return best_[n_ - 1];
}

namespace {

void validate_sampling(std::size_t n, const SampleOptions& options) {
  if (n < 1) throw DomainError("sampling needs n >= 1");
  if (options.count == 0) throw DomainError("sample count must be at least 1");
  if (options.workers == 0) throw DomainError("worker count must be at least 1");
  const u128 bound = static_cast<u128>(options.count) * (n - 1) * (n - 1);
  if (bound >> 64) throw DomainError("count * (n-1)^2 overflows the 64-bit square sum");
}

struct WorkerTotals {
  std::uint64_t sum = 0;
  std::uint64_t square_sum = 0;
};

// Runs the partitioned sampling loop; `values` (when non-empty) receives X_n
// per sample index.
std::vector<WorkerTotals> run_workers(std::size_t n, const Rational& p,
                                      const SampleOptions& options,
                                      std::span<std::int32_t> values) {
  validate_sampling(n, options);
  (void)bernoulli_params(p);
  const unsigned workers = options.workers;
  std::vector<WorkerTotals> totals(workers);
  auto body = [&](unsigned k) {
    const std::uint64_t begin = options.count * k / workers;
    const std::uint64_t end = options.count * (k + 1) / workers;
    PathSampler sampler(n, p);
    WorkerTotals t;
    for (std::uint64_t s = begin; s < end; ++s) {
      PhiloxStream stream(options.seed, static_cast<std::uint32_t>(StreamDomain::kSample), s);
      const std::int32_t x = sampler.draw(stream);
      t.sum += static_cast<std::uint64_t>(x);
      t.square_sum += static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(x);
      if (!values.empty()) values[s] = x;
    }
    totals[k] = t;
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned k = 0; k < workers; ++k) threads.emplace_back(body, k);
    for (auto& th : threads) th.join();
  }
  return totals;
}

SampleReport make_report(std::size_t n, const Rational& p, const SampleOptions& options,
                         std::uint64_t sum, std::uint64_t square_sum) {
  SampleReport r;
  r.n = n;
  r.p = p;
  r.sample_count = options.count;
  r.seed = options.seed;
  r.worker_count = options.workers;
  r.weight_sum = sum;
  r.weight_square_sum = square_sum;
  const auto count = static_cast<long double>(options.count);
  r.mean = static_cast<double>(static_cast<long double>(sum) / count);
  if (options.count > 1) {
    // N*Q - S^2 >= 0 exactly (Cauchy-Schwarz), so no cancellation.
    const u128 nq = static_cast<u128>(options.count) * square_sum;
    const u128 s2 = static_cast<u128>(sum) * sum;
    const long double numer = static_cast<long double>(nq - s2);
    r.variance = static_cast<double>(numer / (count * (count - 1.0L)));
  }
  r.standard_error = std::sqrt(r.variance / static_cast<double>(options.count));
  r.normalized_mean = n > 1 ? r.mean / static_cast<double>(n - 1) : 0.0;
  return r;
}

}  // namespace

SampleReport sample(std::size_t n, const Rational& p, const SampleOptions& options) {
  const auto totals = run_workers(n, p, options, {});
  std::uint64_t sum = 0;
  std::uint64_t square_sum = 0;
  for (const auto& t : totals) {
    sum += t.sum;
    square_sum += t.square_sum;
  }
  return make_report(n, p, options, sum, square_sum);
}

std::vector<std::int32_t> sample_values(std::size_t n, const Rational& p,
                                        const SampleOptions& options) {
  validate_sampling(n, options);
  std::vector<std::int32_t> values(options.count, 0);
  run_workers(n, p, options, values);
  return values;
}

SampleReport summarize(std::size_t n, const Rational& p, const SampleOptions& options,
                       std::span<const std::int32_t> values) {
  validate_sampling(n, options);
  if (values.size() != options.count) throw DomainError("value count differs from options.count");
  std::uint64_t sum = 0;
  std::uint64_t square_sum = 0;
  for (auto x : values) {
    sum += static_cast<std::uint64_t>(x);
    square_sum += static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(x);
  }
  return make_report(n, p, options, sum, square_sum);
}

IncrementCheck coupled_increment_check(std::size_t n, const Rational& p, std::uint64_t count,
                                       std::uint64_t seed) {
  if (n < 1) throw DomainError("coupled increment check needs n >= 1");
  const auto params = bernoulli_params(p);
  IncrementCheck result;
  for (std::uint64_t s = 0; s < count; ++s) {
    PhiloxStream stream(seed, static_cast<std::uint32_t>(StreamDomain::kCoupling), s);
    const WeightAssignment w = random_assignment(n + 1, params, stream);
    const std::int32_t shorter = heaviest_path(w.prefix(n));
    const std::int32_t longer = heaviest_path(w);
    const std::int32_t step = longer - shorter;
    if (step != 0 && step != 1) ++result.violations;
    ++result.samples;
  }
  return result;
}

}  // namespace tlpp
