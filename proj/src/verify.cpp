#include "tlpp/verify.hpp"

#include <algorithm>
#include <string>

#include "tlpp/compositions.hpp"
#include "tlpp/error.hpp"
#include "tlpp/percolation.hpp"
#include "tlpp/recurrence.hpp"
#include "tlpp/series.hpp"

namespace tlpp {

namespace {

constexpr std::size_t kBruteForceVerifyMax = 7;

struct RouteName {
  FaultRoute route;
  std::string_view name;
};

constexpr RouteName kRouteNames[] = {
    {FaultRoute::kNone, "none"},
    {FaultRoute::kExpected, "expected"},
    {FaultRoute::kPgf, "pgf"},
    {FaultRoute::kMoments, "moments"},
    {FaultRoute::kSeriesG, "series_g"},
    {FaultRoute::kSeriesZ, "series_z"},
    {FaultRoute::kCompositions, "compositions"},
    {FaultRoute::kBruteForce, "brute_force"},
    {FaultRoute::kSeriesA, "series_a"},
};

const Rational& fault_delta() {
  static const Rational delta(1, 1L << 20);
  return delta;
}

class Checker {
 public:
  Checker(std::string name, const Rational& p) {
    result_.name = std::move(name);
    result_.p = p;
  }

  template <typename T>
  void equal(const T& got, const T& want, const std::string& what) {
    ++result_.comparisons;
    if (got == want) return;
    if (result_.passed) result_.detail = what;
    result_.passed = false;
  }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(std::size_t n) { return "n=" + std::to_string(n); }

void check_probability(const Rational& p, const VerifyOptions& o, VerifyReport& report) {
  const std::size_t N = o.n_max;
  const Rational q = Rational(1) - p;
  const bool hit_expected = o.fault == FaultRoute::kExpected;
  const bool hit_pgf = o.fault == FaultRoute::kPgf;

  auto tables = exact_tables(p, N);
  std::vector<Rational> f = tables->expected;
  if (hit_expected) f[N] += fault_delta();
  std::vector<PolyInT> pgfs = *pgf_table(p, N);
  if (hit_pgf) {
    std::vector<Rational> c = pgfs[N].coeffs();
    c.resize(std::max<std::size_t>(c.size(), 2));
    c[1] += fault_delta();
    pgfs[N] = PolyInT(c);
  }
  MomentTable m = tables->moments;
  if (o.fault == FaultRoute::kMoments) m.m2[N] += fault_delta();

  {
    Checker c("recurrence_mean", p);
    for (std::size_t n = 1; n <= N; ++n) {
      c.equal(f[n], pgfs[n].derivative().evaluate(Rational(1)), at(n) + ": f(n) differs from P_n'(1)");
      c.equal(f[n], m.m1[n], at(n) + ": f(n) differs from m1[n]");
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("recurrence_moments", p);
    for (std::size_t n = 1; n <= N; ++n) {
      const PolyInT d1 = pgfs[n].derivative();
      const Rational second = d1.derivative().evaluate(Rational(1)) + d1.evaluate(Rational(1));
      c.equal(m.m2[n], second, at(n) + ": m2[n] differs from P_n''(1) + P_n'(1)");
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("distribution_invariants", p);
    for (std::size_t n = 1; n <= N; ++n) {
      WeightDistribution d;
      d.n = n;
      for (std::size_t k = 0; k < n; ++k) d.probs.push_back(pgfs[n][k]);
      try {
        d.check_invariants(p);
        c.equal(true, true, "");
      } catch (const ConsistencyError& e) {
        c.equal(false, true, e.what());
      }
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("series_G", p);
    TruncatedSeries g = series_G(q, N);
    for (std::size_t n = 1; n <= N; ++n) {
      Rational got = g[n];
      if (o.fault == FaultRoute::kSeriesG && n == N) got += fault_delta();
      c.equal(got, Rational(1) + f[n], at(n) + ": [x^n]G differs from 1 + f(n)");
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("series_Z", p);
    BivariateSeries z = series_Z(q, N);
    for (std::size_t n = 1; n <= N; ++n) {
      PolyInT got = z[n];
      if (o.fault == FaultRoute::kSeriesZ && n == N) got = got + PolyInT::constant(fault_delta());
      c.equal(got, pgfs[n], at(n) + ": [x^n]Z differs from the PGF");
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("compositions", p);
    for (std::size_t n = 1; n <= N; ++n) {
      Rational by_cuts = g_by_compositions(static_cast<unsigned>(n), q);
      if (o.fault == FaultRoute::kCompositions && n == N) by_cuts += fault_delta();
      c.equal(by_cuts, Rational(1) + f[n], at(n) + ": composition sum differs from 1 + f(n)");
      c.equal(g_by_triangular_sum(static_cast<unsigned>(n), q), by_cuts,
              at(n) + ": triangular sum differs from the composition sum");
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("brute_force", p);
    for (std::size_t n = 1; n <= std::min(N, kBruteForceVerifyMax); ++n) {
      WeightDistribution bf = brute_force_distribution(n, p);
      if (o.fault == FaultRoute::kBruteForce && n == std::min(N, kBruteForceVerifyMax)) {
        bf.probs.back() += fault_delta();
      }
      c.equal(bf, distribution(n, p), at(n) + ": enumeration differs from the PGF recurrence");
    }
    report.checks.push_back(c.finish());
  }
  {
    Checker c("series_identity", p);
    const std::size_t order = 2 * N + 8;
    TruncatedSeries a = series_A(q, order);
    if (o.fault == FaultRoute::kSeriesA) {
      std::vector<Rational> coeffs = a.coeffs();
      coeffs[N] += fault_delta();
      a = TruncatedSeries(coeffs);
    }
    const TruncatedSeries lhs = TruncatedSeries::one(order) + series_B(q, order).times_x();
    for (std::size_t k = 0; k <= order; ++k) {
      c.equal(lhs[k], a[k], "x^" + std::to_string(k) + ": 1 + x B differs from A");
    }
    report.checks.push_back(c.finish());
  }
}

}  // namespace

FaultRoute parse_fault_route(std::string_view name) {
  for (const auto& r : kRouteNames) {
    if (r.name == name) return r.route;
  }
  throw DomainError("unknown fault route '" + std::string(name) + "'");
}

std::vector<std::string_view> fault_route_names() {
  std::vector<std::string_view> out;
  for (const auto& r : kRouteNames) out.push_back(r.name);
  return out;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.n_max < 1) throw DomainError("verify needs n_max >= 1");
  if (options.n_max > kDefaultCompositionLimit) {
    throw DomainError("verify n_max is capped at the composition limit " +
                      std::to_string(kDefaultCompositionLimit));
  }
  VerifyReport report;
  for (const auto& p : options.probabilities) {
    require_probability(p);
    check_probability(p, options, report);
  }
  return report;
}

}  // namespace tlpp
