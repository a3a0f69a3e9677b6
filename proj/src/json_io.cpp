#include "tlpp/json_io.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "tlpp/error.hpp"

namespace tlpp {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a rational as a \"num/den\" string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

Json to_json(const PolyInT& poly) {
  Json a = Json::array();
  for (const auto& c : poly.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const TruncatedSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", a}};
}

Json to_json(const BivariateSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", a}};
}

Json to_json(const HighPrecisionValue& v) {
  return Json{{"value", v.str()},
              {"approx", v.to_double()},
              {"error_bound", v.error_bound},
              {"digits", v.justified_digits()},
              {"precision_bits", v.precision_bits}};
}

Json to_json(const MomentTable& m) {
  Json rows = Json::array();
  for (std::size_t n = 1; n <= m.n_max; ++n) {
    rows.push_back(Json{{"n", n},
                        {"m1", to_json(m.m1[n])},
                        {"m2", to_json(m.m2[n])},
                        {"variance", to_json(m.variance(n))}});
  }
  return Json{{"n_max", m.n_max}, {"rows", rows}};
}

Json to_json(const SampleReport& r) {
  return Json{{"n", r.n},
              {"p", to_json(r.p)},
              {"sample_count", r.sample_count},
              {"seed", r.seed},
              {"worker_count", r.worker_count},
              {"weight_sum", r.weight_sum},
              {"weight_square_sum", r.weight_square_sum},
              {"mean", r.mean},
              {"variance", r.variance},
              {"stderr", r.standard_error},
              {"normalized_mean", r.normalized_mean}};
}

Json to_json(const LimitConstants& c) {
  return Json{{"p", to_json(c.p)},
              {"variance_formula", std::string(variance_formula_name(c.formula))},
              {"beta", to_json(c.beta)},
              {"sigma_w", to_json(c.sigma_w)},
              {"b1", to_json(c.b1)},
              {"b1_prime", to_json(c.b1_prime)},
              {"b1_second", to_json(c.b1_second)},
              {"c2", to_json(c.c2)},
              {"c1", to_json(c.c1)},
              {"d3", to_json(c.d3)},
              {"d2", to_json(c.d2)},
              {"d1", to_json(c.d1)}};
}

Json to_json(const CltSummary& s) {
  return Json{{"n", s.n},
              {"p", to_json(s.p)},
              {"sample_count", s.sample_count},
              {"seed", s.seed},
              {"worker_count", s.worker_count},
              {"variance_formula", std::string(variance_formula_name(s.formula))},
              {"beta", s.beta},
              {"sigma_w", s.sigma},
              {"mean", s.mean},
              {"variance", s.variance},
              {"skewness", s.skewness},
              {"kolmogorov", s.kolmogorov}};
}

Json to_json(const WeightDistribution& d, const Rational& p) {
  Json probs = Json::array();
  for (const auto& x : d.probs) probs.push_back(to_json(x));
  return Json{{"n", d.n}, {"p", to_json(p)}, {"probs", probs}};
}

WeightDistribution distribution_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("distribution must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) {
    throw DomainError("distribution needs a nonnegative integer \"n\"");
  }
  if (!j.contains("probs") || !j["probs"].is_array()) {
    throw DomainError("distribution needs a \"probs\" array");
  }
  WeightDistribution d;
  d.n = j["n"].get<std::size_t>();
  for (const auto& x : j["probs"]) d.probs.push_back(rational_from_json(x));
  if (j.contains("p")) {
    const Rational p = rational_from_json(j["p"]);
    require_probability(p);
    d.check_invariants(p);
  } else {
    if (d.n < 1 || d.probs.size() != d.n) throw ConsistencyError("support size differs from n");
    for (const auto& x : d.probs) {
      if (x.sign() < 0) throw ConsistencyError("negative probability " + x.str());
    }
    if (d.total() != Rational(1)) throw ConsistencyError("probabilities sum to " + d.total().str());
  }
  return d;
}

}  // namespace tlpp
