#include <doctest.h>

#include <cmath>
#include <vector>

#include "tlpp/error.hpp"
#include "tlpp/recurrence.hpp"

using tlpp::Rational;

namespace {

std::vector<Rational> R(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("small expected weights at p = 1/2") {
  const Rational h(1, 2);
  CHECK(tlpp::expected_weight(1, h) == Rational(0));
  CHECK(tlpp::expected_weight(2, h) == Rational(1, 2));
  CHECK(tlpp::expected_weight(3, h) == Rational(9, 8));
  CHECK(tlpp::expected_weight(4, h) == Rational(111, 64));
  CHECK(tlpp::expected_weight(5, h) == Rational(2399, 1024));
  CHECK(tlpp::expected_weight(6, h) == Rational(96735, 32768));
  CHECK(tlpp::expected_weight(7, h) == Rational(7468479, 2097152));
  CHECK(tlpp::expected_weight(8, h) == Rational(1119481727, 268435456));
}

TEST_CASE("expected weight at other p") {
  CHECK(tlpp::expected_weight(6, Rational(1, 3)) == Rational(32598325, 14348907));
  CHECK(tlpp::expected_weight(2, Rational(3, 4)) == Rational(3, 4));
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(tlpp::expected_weight(n, Rational(0)) == Rational(0));
    CHECK(tlpp::expected_weight(n, Rational(1)) == Rational(static_cast<long>(n - 1)));
  }
}

TEST_CASE("pgf and distribution") {
  const Rational h(1, 2);
  CHECK(tlpp::pgf(1, h) == tlpp::PolyInT::constant(Rational(1)));
  CHECK(tlpp::pgf(3, h).coeffs() == R({{1, 8}, {5, 8}, {1, 4}}));
  CHECK(tlpp::distribution(5, h).probs == R({{1, 1024}, {127, 1024}, {15, 32}, {11, 32}, {1, 16}}));
  CHECK(tlpp::distribution(5, Rational(1, 3)).probs ==
        R({{1024, 59049}, {20576, 59049}, {1036, 2187}, {4, 27}, {1, 81}}));
  CHECK(tlpp::distribution(5, Rational(3, 4)).probs ==
        R({{1, 1048576}, {8319, 1048576}, {1431, 8192}, {513, 1024}, {81, 256}}));
  CHECK(tlpp::distribution(4, h).mean() == Rational(111, 64));
  CHECK_THROWS_AS(tlpp::pgf(0, h), tlpp::DomainError);
  CHECK_THROWS_AS(tlpp::distribution(3, Rational(5, 4)), tlpp::DomainError);
}

TEST_CASE("distribution invariants hold and violations are named") {
  for (const Rational p : {Rational(1, 2), Rational(1, 3), Rational(3, 4), Rational(0), Rational(1)}) {
    for (std::size_t n = 1; n <= 15; ++n) {
      const auto d = tlpp::distribution(n, p);
      CHECK_NOTHROW(d.check_invariants(p));
      CHECK(d.mean() == tlpp::expected_weight(n, p));
    }
  }
  auto d = tlpp::distribution(4, Rational(1, 2));
  d.probs[0] += Rational(1, 64);
  d.probs[1] -= Rational(1, 64);
  CHECK_THROWS_WITH_AS(d.check_invariants(Rational(1, 2)), doctest::Contains("P(X=0)"),
                       tlpp::ConsistencyError);
  d = tlpp::distribution(4, Rational(1, 2));
  d.probs[1] += Rational(1, 64);
  CHECK_THROWS_WITH_AS(d.check_invariants(Rational(1, 2)), doctest::Contains("sum"),
                       tlpp::ConsistencyError);
  d = tlpp::distribution(4, Rational(1, 2));
  d.probs.pop_back();
  CHECK_THROWS_AS(d.check_invariants(Rational(1, 2)), tlpp::ConsistencyError);
}

TEST_CASE("moments") {
  const auto m = tlpp::moments(3, Rational(1, 2));
  CHECK(m.m1[3] == Rational(9, 8));
  CHECK(m.m2[3] == Rational(13, 8));
  CHECK(m.variance(3) == Rational(23, 64));
  CHECK(m.variance(2) == Rational(1, 4));
  const auto big = tlpp::moments(20, Rational(1, 3));
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto d = tlpp::distribution(n, Rational(1, 3));
    CHECK(big.m1[n] == d.mean());
    CHECK(big.m2[n] == d.second_moment());
  }
  CHECK_THROWS_AS(tlpp::moments(0, Rational(1, 2)), tlpp::DomainError);
}

TEST_CASE("float moments track the exact ones") {
  for (const Rational p : {Rational(1, 2), Rational(1, 3), Rational(9, 10)}) {
    const auto exact = tlpp::moments(60, p);
    const auto fl = tlpp::moments_float(60, p);
    for (std::size_t n = 2; n <= 60; ++n) {
      CHECK(fl.m1[n] == doctest::Approx(exact.m1[n].to_double()).epsilon(1e-12));
      CHECK(fl.m2[n] == doctest::Approx(exact.m2[n].to_double()).epsilon(1e-12));
    }
  }
  CHECK(tlpp::moments_float(8, Rational(1, 2)).m1[8] ==
        doctest::Approx(4.170394416898489).epsilon(1e-14));
}

TEST_CASE("cache answers growing and shrinking requests consistently") {
  tlpp::clear_recurrence_cache();
  const Rational p(2, 7);
  const Rational small = tlpp::expected_weight(5, p);
  const Rational large = tlpp::expected_weight(40, p);
  CHECK(tlpp::expected_weight(5, p) == small);
  tlpp::clear_recurrence_cache();
  CHECK(tlpp::expected_weight(40, p) == large);
  CHECK(tlpp::exact_tables(p, 10)->n_max >= 10);
}
