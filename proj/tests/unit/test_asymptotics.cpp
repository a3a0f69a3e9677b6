#include <doctest.h>

#include <cmath>
#include <vector>

#include "tlpp/asymptotics.hpp"
#include "tlpp/error.hpp"
#include "tlpp/recurrence.hpp"

using tlpp::Rational;
using tlpp::VarianceFormula;

TEST_CASE("beta at p = 1/2") {
  const auto b = tlpp::beta_tr(Rational(1, 2));
  CHECK(std::fabs(b.to_double() - 0.60914971106) < 1e-11);
  CHECK(b.to_double() >= 0.595);
  CHECK(b.to_double() <= 0.614);
  CHECK(b.error_bound < 1e-15);
  CHECK(b.justified_digits() >= 11);
}

TEST_CASE("beta edge cases") {
  CHECK(tlpp::beta_tr(Rational(1)).to_double() == 1.0);
  CHECK_THROWS_AS(tlpp::beta_tr(Rational(0)), tlpp::DomainError);
  CHECK_THROWS_AS(tlpp::beta_tr(Rational(5, 4)), tlpp::DomainError);
}

TEST_CASE("beta is increasing and between p and 1") {
  double previous = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const Rational p(k, 10);
    const double b = tlpp::beta_tr(p).to_double();
    CHECK(b > previous);
    CHECK(b >= p.to_double());
    CHECK(b <= 1.0);
    previous = b;
  }
}

TEST_CASE("limit constants") {
  const auto c = tlpp::limit_constants(Rational(1, 2));
  const double B = c.b1.to_double();
  const double D = c.b1_prime.to_double();
  CHECK(std::fabs(c.beta.to_double() * B - 1.0) <= c.beta.error_bound * B + c.b1.error_bound + 1e-15);
  CHECK(c.c2.to_double() == doctest::Approx(c.beta.to_double()).epsilon(1e-15));
  CHECK(c.c1.to_double() == doctest::Approx(-0.2971982807691869).epsilon(1e-13));
  CHECK(c.d3.to_double() == doctest::Approx(-1.0 / (B * B)).epsilon(1e-14));
  CHECK(c.d2.to_double() == doctest::Approx(0.36207649371986017).epsilon(1e-13));
  CHECK(c.d1.to_double() == doctest::Approx(-0.18449150612875415).epsilon(1e-13));
  CHECK(c.sigma_w.to_double() == doctest::Approx(std::sqrt(1 / (B * B) + 2 * D / (B * B * B) - 1 / B)));
  for (const auto* v : {&c.beta, &c.sigma_w, &c.b1, &c.b1_prime, &c.b1_second, &c.c1, &c.d1}) {
    CHECK(v->error_bound >= 0.0);
    CHECK(v->error_bound < 1e-13);
  }
}

TEST_CASE("variance formulas at p = 1/2") {
  const Rational h(1, 2);
  const double re = tlpp::sigma_w(h).to_double();
  const double th = tlpp::sigma_w(h, 1e-15, VarianceFormula::kSixTerm).to_double();
  const double le = tlpp::sigma_w(h, 1e-15, VarianceFormula::kInverseCube).to_double();
  CHECK(re * re == doctest::Approx(0.12399015314570139).epsilon(1e-12));
  CHECK(th * th == doctest::Approx(0.8481431405854217).epsilon(1e-12));
  CHECK(le * le == doctest::Approx(0.23671004635642776).epsilon(1e-12));
}

TEST_CASE("re-derived variance constant matches the exact slope") {
  const double slope = tlpp::variance_slope(400, Rational(1, 2));
  const double s = tlpp::sigma_w(Rational(1, 2)).to_double();
  CHECK(std::fabs(slope - s * s) < 1e-3);
  const double s34 = tlpp::sigma_w(Rational(3, 4)).to_double();
  CHECK(s34 * s34 == doctest::Approx(0.11211212957111749).epsilon(1e-12));
  CHECK(std::fabs(tlpp::variance_slope(800, Rational(3, 4)) - s34 * s34) < 1e-3);
  CHECK(std::fabs(tlpp::variance_slope(800, Rational(1, 3)) -
                  std::pow(tlpp::sigma_w(Rational(1, 3)).to_double(), 2)) < 1e-3);
}

TEST_CASE("sigma edge cases") {
  CHECK(tlpp::sigma_w(Rational(1)).to_double() == 0.0);
  CHECK_THROWS_AS(tlpp::sigma_w(Rational(0)), tlpp::DomainError);
  CHECK(tlpp::parse_variance_formula("inverse-cube") == VarianceFormula::kInverseCube);
  CHECK(tlpp::variance_formula_name(VarianceFormula::kSixTerm) == "six-term");
  CHECK_THROWS_AS(tlpp::parse_variance_formula("other"), tlpp::DomainError);
}

TEST_CASE("variance slope") {
  CHECK(tlpp::variance_slope(3, Rational(1, 2)) == doctest::Approx(23.0 / 128.0).epsilon(1e-15));
  for (const Rational p : {Rational(1, 2), Rational(1, 5), Rational(7, 9)}) {
    const double pd = p.to_double();
    CHECK(tlpp::variance_slope(2, p) == doctest::Approx(pd * (1 - pd)).epsilon(1e-15));
    CHECK(tlpp::variance_slope(64, p, 64) == doctest::Approx(tlpp::variance_slope(64, p, 0)).epsilon(1e-11));
  }
  CHECK(tlpp::variance_slope(30, Rational(1)) == 0.0);
  CHECK_THROWS_AS(tlpp::variance_slope(1, Rational(1, 2)), tlpp::DomainError);
}

TEST_CASE("normalized exact means approach beta monotonically") {
  for (const Rational p : {Rational(1, 2), Rational(1, 3)}) {
    const double beta = tlpp::beta_tr(p).to_double();
    const auto m = tlpp::moments_float(400, p);
    double previous = 1e9;
    for (std::size_t n : {50, 100, 200, 400}) {
      const double gap = std::fabs(m.m1[n] / static_cast<double>(n - 1) - beta);
      CHECK(gap < previous);
      previous = gap;
    }
  }
}

TEST_CASE("Kolmogorov statistic") {
  CHECK(tlpp::kolmogorov_statistic({0.0}) == doctest::Approx(0.5));
  CHECK(tlpp::kolmogorov_statistic({-40.0, 40.0}) == doctest::Approx(0.5));
  // Ties are one jump of the empirical CDF.
  CHECK(tlpp::kolmogorov_statistic({0.0, 0.0, 0.0}) == doctest::Approx(0.5));
  // Two points at the quartiles of Phi: the largest gap is 1/4 just below 0.6745.
  CHECK(tlpp::kolmogorov_statistic({-0.6744897501960817, 0.6744897501960817}) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK_THROWS_AS(tlpp::kolmogorov_statistic({}), tlpp::DomainError);
}

TEST_CASE("CLT diagnostic") {
  const auto s = tlpp::clt_diagnostic(300, Rational(1, 2), 3000, 17, 2);
  CHECK(s.sample_count == 3000);
  CHECK(std::fabs(s.mean) < 0.15);
  CHECK(s.variance > 0.85);
  CHECK(s.variance < 1.15);
  CHECK(s.kolmogorov < 0.08);
  CHECK(std::fabs(s.skewness) < 0.3);
  const auto again = tlpp::clt_diagnostic(300, Rational(1, 2), 3000, 17, 1);
  CHECK(again.kolmogorov == s.kolmogorov);
  CHECK_THROWS_AS(tlpp::clt_diagnostic(300, Rational(1), 100, 1), tlpp::DomainError);
  CHECK_THROWS_AS(tlpp::clt_diagnostic(300, Rational(0), 100, 1), tlpp::DomainError);
  CHECK_THROWS_AS(tlpp::clt_diagnostic(1, Rational(1, 2), 100, 1), tlpp::DomainError);
}

TEST_CASE("increment covariance") {
  const auto c = tlpp::increment_covariance(200, 100, Rational(1, 2), 4000, 5);
  CHECK(c.sample_count == 4000);
  CHECK(std::fabs(c.correlation) < 0.1);
  CHECK_THROWS_AS(tlpp::increment_covariance(10, 10, Rational(1, 2), 10, 1), tlpp::DomainError);
}
