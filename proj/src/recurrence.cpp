#include "tlpp/recurrence.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "tlpp/error.hpp"
#include "tlpp/kernels.hpp"
#include "tlpp/qpowers.hpp"

namespace tlpp {

namespace {

template <typename Table>
class PerProbabilityCache {
 public:
  template <typename Build>
  std::shared_ptr<const Table> get(const Rational& p, std::size_t n_max, Build&& build) {
    const std::string key = p.str();
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end() && it->second.n_max >= n_max) return it->second.table;
    }
    // Built outside the lock; a concurrent request may build the same table.
    auto table = std::make_shared<const Table>(build());
    std::lock_guard lock(mutex_);
    auto& slot = entries_[key];
    if (!slot.table || slot.n_max < n_max) slot = Entry{n_max, table};
    return slot.table->size_hint() >= n_max ? slot.table : table;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
  }

 private:
  struct Entry {
    std::size_t n_max = 0;
    std::shared_ptr<const Table> table;
  };
  std::mutex mutex_;
  std::map<std::string, Entry> entries_;
};

struct CachedExact : ExactTables {
  std::size_t size_hint() const { return n_max; }
};

struct CachedPgf {
  std::size_t n_max = 0;
  std::shared_ptr<const std::vector<PolyInT>> polys;
  std::size_t size_hint() const { return n_max; }
};

PerProbabilityCache<CachedExact>& exact_cache() {
  static PerProbabilityCache<CachedExact> cache;
  return cache;
}

PerProbabilityCache<CachedPgf>& pgf_cache() {
  static PerProbabilityCache<CachedPgf> cache;
  return cache;
}

CachedExact build_exact(const Rational& p, std::size_t n_max) {
  const Rational q = Rational(1) - p;
  const QPowers powers(q, n_max + 1);

  CachedExact t;
  t.p = p;
  t.n_max = n_max;
  t.step.assign(n_max + 1, Rational(0));
  for (std::size_t i = 1; i <= n_max; ++i) t.step[i] = powers.triangular(i) - powers.triangular(i + 1);

  // (1 - q^{i-1}) q^{C(i-1,2)} for i = 2..n_max: probability that node i is
  // where the heaviest path first gains weight.
  std::vector<Rational> first_gain(n_max + 1, Rational(0));
  for (std::size_t i = 2; i <= n_max; ++i) {
    first_gain[i] = (Rational(1) - pow(q, i - 1)) * powers.triangular(i - 1);
  }
  t.expected.assign(n_max + 1, Rational(0));
  for (std::size_t n = 2; n <= n_max; ++n) {
    Rational acc(0);
    for (std::size_t i = 2; i <= n; ++i) acc += first_gain[i] * (t.expected[n - i + 1] + Rational(1));
    t.expected[n] = std::move(acc);
  }

  auto& m = t.moments;
  m.n_max = n_max;
  m.m1.assign(n_max + 1, Rational(0));
  m.m2.assign(n_max + 1, Rational(0));
  for (std::size_t n = 2; n <= n_max; ++n) {
    Rational s1(0);
    Rational s2(0);
    for (std::size_t i = 1; i < n; ++i) {
      const Rational& c = t.step[i];
      const Rational& a = m.m1[n - i];
      s1 += c * (Rational(1) + a);
      s2 += c * (m.m2[n - i] + Rational(2) * a + Rational(1));
    }
    m.m1[n] = std::move(s1);
    m.m2[n] = std::move(s2);
  }
  return t;
}

CachedPgf build_pgf(const Rational& p, std::size_t n_max) {
  const Rational q = Rational(1) - p;
  const QPowers powers(q, n_max + 1);
  auto polys = std::make_shared<std::vector<PolyInT>>();
  polys->reserve(n_max + 1);
  polys->push_back(PolyInT::constant(Rational(1)));
  for (std::size_t n = 1; n <= n_max; ++n) {
    PolyInT acc;
    for (std::size_t i = 1; i < n; ++i) {
      acc += (*polys)[n - i] * (powers.triangular(i) - powers.triangular(i + 1));
    }
    acc = acc.times_t();
    acc += PolyInT::constant(powers.triangular(n));
    polys->push_back(std::move(acc));
  }
  return CachedPgf{n_max, std::move(polys)};
}

}  // namespace

Rational WeightDistribution::mean() const {
  Rational s(0);
  for (std::size_t k = 1; k < probs.size(); ++k) s += probs[k] * Rational(static_cast<long>(k));
  return s;
}

Rational WeightDistribution::second_moment() const {
  Rational s(0);
  for (std::size_t k = 1; k < probs.size(); ++k) {
    s += probs[k] * Rational(static_cast<long>(k * k));
  }
  return s;
}

Rational WeightDistribution::total() const {
  Rational s(0);
  for (const auto& x : probs) s += x;
  return s;
}

void WeightDistribution::check_invariants(const Rational& p) const {
  const std::string where = "WeightDistribution(n=" + std::to_string(n) + "): ";
  if (n < 1 || probs.size() != n) throw ConsistencyError(where + "support size differs from n");
  for (const auto& x : probs) {
    if (x.sign() < 0) throw ConsistencyError(where + "negative probability " + x.str());
  }
  if (total() != Rational(1)) throw ConsistencyError(where + "probabilities sum to " + total().str());
  const Rational q = Rational(1) - p;
  if (probs.front() != q_triangular_power(q, n)) {
    throw ConsistencyError(where + "P(X=0) is not q^{C(n,2)}");
  }
  if (probs.back() != pow(p, n - 1)) throw ConsistencyError(where + "P(X=n-1) is not p^{n-1}");
}

std::shared_ptr<const ExactTables> exact_tables(const Rational& p, std::size_t n_max) {
  require_probability(p);
  return exact_cache().get(p, n_max, [&] { return build_exact(p, n_max); });
}

std::shared_ptr<const std::vector<PolyInT>> pgf_table(const Rational& p, std::size_t n_max) {
  require_probability(p);
  return pgf_cache().get(p, n_max, [&] { return build_pgf(p, n_max); })->polys;
}

Rational expected_weight(std::size_t n, const Rational& p) {
  return exact_tables(p, n)->expected[n];
}

PolyInT pgf(std::size_t n, const Rational& p) {
  if (n < 1) throw DomainError("pgf requires n >= 1");
  return (*pgf_table(p, n))[n];
}

WeightDistribution distribution(std::size_t n, const Rational& p) {
  const PolyInT g = pgf(n, p);
  WeightDistribution d;
  d.n = n;
  d.probs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) d.probs.push_back(g[k]);
  return d;
}

MomentTable moments(std::size_t n_max, const Rational& p) {
  if (n_max < 1) throw DomainError("moments requires n_max >= 1");
  const auto t = exact_tables(p, n_max);
  MomentTable out;
  out.n_max = n_max;
  out.m1.assign(t->moments.m1.begin(), t->moments.m1.begin() + n_max + 1);
  out.m2.assign(t->moments.m2.begin(), t->moments.m2.begin() + n_max + 1);
  return out;
}

FloatMoments moments_float(std::size_t n_max, const Rational& p) {
  require_probability(p);
  if (n_max < 1) throw DomainError("moments_float requires n_max >= 1");
  const double pd = p.to_double();
  const double log_q = std::log1p(-pd);

  // step[i] = q^{C(i,2)} (1 - q^i), with 1 - q^i = -expm1(i log q) to keep
  // small p accurate.
  std::vector<double> step(n_max + 1, 0.0);
  for (std::size_t i = 1; i <= n_max; ++i) {
    if (pd == 1.0) {
      step[i] = i == 1 ? 1.0 : 0.0;
      continue;
    }
    const double di = static_cast<double>(i);
    step[i] = std::exp(static_cast<double>(binomial2(i)) * log_q) * -std::expm1(di * log_q);
  }

  // History is stored newest-first at the tail of rev_*: rev[N - k] = m(k),
  // so m(n-i) for i = 1..n-1 is the contiguous run starting at N - n + 1.
  const std::size_t N = n_max;
  std::vector<double> rev1(N + 1, 0.0);
  std::vector<double> rev2(N + 1, 0.0);
  FloatMoments out;
  out.n_max = n_max;
  out.m1.assign(n_max + 1, 0.0);
  out.m2.assign(n_max + 1, 0.0);

  const auto& k = kernels::active_kernels();
  double step_sum = 0.0;  // sum_{i=1}^{n-1} step[i]
  for (std::size_t n = 2; n <= n_max; ++n) {
    step_sum += step[n - 1];
    const std::span<const double> c(step.data() + 1, n - 1);
    const std::span<const double> h1(rev1.data() + (N - n + 1), n - 1);
    const std::span<const double> h2(rev2.data() + (N - n + 1), n - 1);
    const double d1 = k.dot(c, h1);
    const double d2 = k.dot(c, h2);
    out.m1[n] = step_sum + d1;
    out.m2[n] = d2 + 2.0 * d1 + step_sum;
    rev1[N - n] = out.m1[n];
    rev2[N - n] = out.m2[n];
  }
  return out;
}

void clear_recurrence_cache() {
  exact_cache().clear();
  pgf_cache().clear();
}

}  // namespace tlpp
