#include "tlpp/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tlpp/error.hpp"
#include "tlpp/percolation.hpp"
#include "tlpp/recurrence.hpp"

namespace tlpp {

namespace {

// First-order propagation: |df/dx_i| e_i summed, plus a few ulps of the
// working precision for the arithmetic itself.
HighPrecisionValue propagate(BigFloat value, std::initializer_list<std::pair<double, double>> terms,
                             unsigned bits) {
  HighPrecisionValue out;
  out.precision_bits = bits;
  double err = 0.0;
  for (const auto& [grad, e] : terms) err += std::fabs(grad) * e;
  const double mag = std::fabs(value.convert_to<double>());
  out.error_bound = err + 8.0 * mag * std::ldexp(1.0, 1 - static_cast<int>(bits));
  out.value = std::move(value);
  return out;
}

Rational q_of(const Rational& p, std::string_view op) {
  require_probability(p);
  if (p.is_zero()) {
    throw DomainError(std::string(op) + " needs p > 0 (B_p(1) diverges at p = 0)");
  }
  return Rational(1) - p;
}


HighPrecisionValue radicand(VarianceFormula f, const HighPrecisionValue& b,
                            const HighPrecisionValue& b1) {
  const unsigned bits = b.precision_bits;
  PrecisionScope scope(bits);
  const BigFloat& B = b.value;
  const BigFloat& D = b1.value;
  const double Bd = b.to_double();
  const double Dd = b1.to_double();
  switch (f) {
    case VarianceFormula::kRederived:
      return propagate(1 / (B * B) + 2 * D / (B * B * B) - 1 / B,
                       {{-2 / std::pow(Bd, 3) - 6 * Dd / std::pow(Bd, 4) + 1 / (Bd * Bd), b.error_bound},
                        {2 / std::pow(Bd, 3), b1.error_bound}},
                       bits);
    case VarianceFormula::kSixTerm:
      return propagate(1 / (B * B) + 6 * D / (B * B * B) - 1 / B,
                       {{-2 / std::pow(Bd, 3) - 18 * Dd / std::pow(Bd, 4) + 1 / (Bd * Bd), b.error_bound},
                        {6 / std::pow(Bd, 3), b1.error_bound}},
                       bits);
    case VarianceFormula::kInverseCube:
      return propagate(1 / (B * B) - 2 * D / pow(B, 5),
                       {{-2 / std::pow(Bd, 3) + 10 * Dd / std::pow(Bd, 6), b.error_bound},
                        {-2 / std::pow(Bd, 5), b1.error_bound}},
                       bits);
  }
  throw DomainError("unknown variance formula");
}

HighPrecisionValue sqrt_of(const HighPrecisionValue& r, const Rational& p, VarianceFormula f) {
  PrecisionScope scope(r.precision_bits);
  const double rd = r.to_double();
  if (rd < -r.error_bound) {
    throw DomainError("variance formula '" + std::string(variance_formula_name(f)) +
                      "' has a negative radicand " + std::to_string(rd) + " at p = " + p.str());
  }
  HighPrecisionValue out;
  out.precision_bits = r.precision_bits;
  if (rd <= r.error_bound) {
    // Zero within its bound: sqrt is not differentiable there.
    out.value = rd > 0 ? BigFloat(sqrt(r.value)) : BigFloat(0);
    out.error_bound = std::sqrt(std::max(rd, 0.0) + r.error_bound);
    return out;
  }
  out.value = sqrt(r.value);
  out.error_bound = r.error_bound / (2 * std::sqrt(rd - r.error_bound)) +
                    std::fabs(out.to_double()) * std::ldexp(1.0, 2 - static_cast<int>(r.precision_bits));
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

std::string_view variance_formula_name(VarianceFormula f) {
  switch (f) {
    case VarianceFormula::kRederived:
      return "rederived";
    case VarianceFormula::kSixTerm:
      return "six-term";
    case VarianceFormula::kInverseCube:
      return "inverse-cube";
  }
  return "?";
}

VarianceFormula parse_variance_formula(std::string_view name) {
  if (name == "rederived") return VarianceFormula::kRederived;
  if (name == "six-term") return VarianceFormula::kSixTerm;
  if (name == "inverse-cube") return VarianceFormula::kInverseCube;
  throw DomainError("unknown variance formula '" + std::string(name) +
                    "' (expected rederived, six-term or inverse-cube)");
}

HighPrecisionValue beta_tr(const Rational& p, double tol) {
  const Rational q = q_of(p, "beta_tr");
  const HighPrecisionValue b = b_series_at_one(q, 0, tol);
  PrecisionScope scope(b.precision_bits);
  const double Bd = b.to_double();
  HighPrecisionValue out = propagate(1 / b.value, {{1.0 / (Bd * (Bd - b.error_bound)), b.error_bound}},
                                     b.precision_bits);
  return out;
}

HighPrecisionValue sigma_w(const Rational& p, double tol, VarianceFormula formula) {
  const Rational q = q_of(p, "sigma_w");
  const HighPrecisionValue b = b_series_at_one(q, 0, tol);
  const HighPrecisionValue b1 = b_series_at_one(q, 1, tol);
  return sqrt_of(radicand(formula, b, b1), p, formula);
}

LimitConstants limit_constants(const Rational& p, double tol, VarianceFormula formula) {
  const Rational q = q_of(p, "limit_constants");
  LimitConstants c;
  c.p = p;
  c.formula = formula;
  c.b1 = b_series_at_one(q, 0, tol);
  c.b1_prime = b_series_at_one(q, 1, tol);
  c.b1_second = b_series_at_one(q, 2, tol);
  c.beta = beta_tr(p, tol);
  c.sigma_w = sqrt_of(radicand(formula, c.b1, c.b1_prime), p, formula);

  const unsigned bits = c.b1.precision_bits;
  PrecisionScope scope(bits);
  const BigFloat& B = c.b1.value;
  const BigFloat& D = c.b1_prime.value;
  const BigFloat& E = c.b1_second.value;
  const double Bd = c.b1.to_double();
  const double Dd = c.b1_prime.to_double();
  const double Ed = c.b1_second.to_double();
  const double eB = c.b1.error_bound;
  const double eD = c.b1_prime.error_bound;
  const double eE = c.b1_second.error_bound;
  c.c2 = propagate(1 / B, {{1 / (Bd * Bd), eB}}, bits);
  c.c1 = propagate(-D / (B * B), {{2 * Dd / std::pow(Bd, 3), eB}, {1 / (Bd * Bd), eD}}, bits);
  c.d3 = propagate(-1 / (B * B), {{2 / std::pow(Bd, 3), eB}}, bits);
  c.d2 = propagate(2 * D / pow(B, 3), {{6 * Dd / std::pow(Bd, 4), eB}, {2 / std::pow(Bd, 3), eD}},
                   bits);
  c.d1 = propagate(-3 * D * D / pow(B, 4) + E / pow(B, 3),
                   {{12 * Dd * Dd / std::pow(Bd, 5) - 3 * Ed / std::pow(Bd, 4), eB},
                    {6 * Dd / std::pow(Bd, 4), eD},
                    {1 / std::pow(Bd, 3), eE}},
                   bits);
  return c;
}

double variance_slope(std::size_t n, const Rational& p, std::size_t exact_threshold) {
  require_probability(p);
  if (n < 2) throw DomainError("variance_slope needs n >= 2");
  if (n <= exact_threshold) {
    const MomentTable m = moments(n, p);
    return (m.variance(n) / Rational(static_cast<long>(n - 1))).to_double();
  }
  const FloatMoments m = moments_float(n, p);
  return m.variance(n) / static_cast<double>(n - 1);
}

double kolmogorov_statistic(std::vector<double> values) {
  if (values.empty()) throw DomainError("Kolmogorov statistic of an empty sample");
  std::sort(values.begin(), values.end());
  const double total = static_cast<double>(values.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double phi = normal_cdf(values[i]);
    d = std::max(d, std::fabs(static_cast<double>(i) / total - phi));
    d = std::max(d, std::fabs(static_cast<double>(j) / total - phi));
    i = j;
  }
  return d;
}

CltSummary clt_diagnostic(std::size_t n, const Rational& p, std::uint64_t count,
                          std::uint64_t seed, unsigned workers, VarianceFormula formula) {
  require_probability(p);
  if (p.is_zero() || p.is_one()) {
    throw DomainError("clt_diagnostic needs 0 < p < 1 (X_n is deterministic otherwise)");
  }
  if (n < 2) throw DomainError("clt_diagnostic needs n >= 2");
  if (count < 2) throw DomainError("clt_diagnostic needs at least 2 samples");

  CltSummary s;
  s.n = n;
  s.p = p;
  s.sample_count = count;
  s.seed = seed;
  s.worker_count = workers;
  s.formula = formula;
  s.beta = beta_tr(p).to_double();
  s.sigma = sigma_w(p, kDefaultTolerance, formula).to_double();
  if (!(s.sigma > 0.0)) throw DomainError("sigma_w is zero; cannot standardize");

  const auto xs = sample_values(n, p, SampleOptions{count, seed, workers});
  const double shift = s.beta * static_cast<double>(n - 1);
  const double scale = s.sigma * std::sqrt(static_cast<double>(n - 1));
  std::vector<double> w(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) w[i] = (static_cast<double>(xs[i]) - shift) / scale;

  const double total = static_cast<double>(w.size());
  double sum = 0.0;
  for (double v : w) sum += v;
  s.mean = sum / total;
  double m2 = 0.0;
  double m3 = 0.0;
  for (double v : w) {
    const double d = v - s.mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  s.variance = m2 / (total - 1.0);
  const double pop2 = m2 / total;
  s.skewness = pop2 > 0.0 ? (m3 / total) / std::pow(pop2, 1.5) : 0.0;
  s.kolmogorov = kolmogorov_statistic(std::move(w));
  return s;
}

IncrementCovariance increment_covariance(std::size_t n, std::size_t split, const Rational& p,
                                         std::uint64_t count, std::uint64_t seed) {
  if (n < 3 || split < 2 || split >= n) {
    throw DomainError("increment_covariance needs 2 <= split < n");
  }
  if (count < 2) throw DomainError("increment_covariance needs at least 2 samples");
  PathSampler sampler(n, p);
  double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::uint64_t s = 0; s < count; ++s) {
    PhiloxStream stream(seed, static_cast<std::uint32_t>(StreamDomain::kSample), s);
    const double total = sampler.draw(stream);
    const double a = sampler.profile()[split - 1];
    const double b = total - a;
    sa += a;
    sb += b;
    saa += a * a;
    sbb += b * b;
    sab += a * b;
  }
  const double c = static_cast<double>(count);
  IncrementCovariance r;
  r.n = n;
  r.split = split;
  r.sample_count = count;
  r.covariance = (sab - sa * sb / c) / (c - 1.0);
  const double va = (saa - sa * sa / c) / (c - 1.0);
  const double vb = (sbb - sb * sb / c) / (c - 1.0);
  r.correlation = va > 0.0 && vb > 0.0 ? r.covariance / std::sqrt(va * vb) : 0.0;
  return r;
}

}  // namespace tlpp
