#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "tlpp/compositions.hpp"
#include "tlpp/error.hpp"
#include "tlpp/recurrence.hpp"
#include "tlpp/series.hpp"

using tlpp::Rational;

TEST_CASE("composition enumeration") {
  CHECK(tlpp::composition_count(0) == 1);
  CHECK(tlpp::composition_count(1) == 1);
  CHECK(tlpp::composition_count(5) == 16);

  std::set<std::vector<unsigned>> seen;
  tlpp::for_each_composition(4, [&](const tlpp::Composition& c) {
    CHECK(c.target() == 4);
    seen.insert(c.parts());
  });
  const std::set<std::vector<unsigned>> want{{4},       {1, 3},    {3, 1},    {2, 2},
                                             {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(seen == want);

  std::size_t empty = 0;
  tlpp::for_each_composition(0, [&](const tlpp::Composition& c) {
    CHECK(c.length() == 0);
    ++empty;
  });
  CHECK(empty == 1);
  CHECK_THROWS_AS(tlpp::for_each_composition(30, [](const tlpp::Composition&) {}), tlpp::DomainError);
  CHECK_NOTHROW(tlpp::for_each_composition(3, [](const tlpp::Composition&) {}, 3));
}

TEST_CASE("composition weights") {
  const tlpp::Composition c({2, 1, 3});
  CHECK(c.target() == 6);
  CHECK(c.length() == 3);
  CHECK(c.weight_exponent() == 3 + 1 + 6);
  CHECK_THROWS_AS(tlpp::Composition({1, 0, 2}), tlpp::DomainError);
}

TEST_CASE("h by compositions matches 1/B") {
  for (const Rational q : {Rational(1, 2), Rational(2, 3)}) {
    const auto h = tlpp::series_H(q, 14);
    for (unsigned m = 0; m <= 14; ++m) CHECK(tlpp::h_by_compositions(m, q) == h[m]);
  }
}

TEST_CASE("g by compositions and by the triangular sum") {
  for (const Rational p : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
    const Rational q = Rational(1) - p;
    CHECK(tlpp::g_by_compositions(0, q) == Rational(1));
    for (unsigned n = 1; n <= 12; ++n) {
      const Rational want = Rational(1) + tlpp::expected_weight(n, p);
      CHECK(tlpp::g_by_compositions(n, q) == want);
      CHECK(tlpp::g_by_triangular_sum(n, q) == want);
    }
  }
  CHECK_THROWS_AS(tlpp::g_by_compositions(26, Rational(1, 2)), tlpp::DomainError);
  CHECK_THROWS_AS(tlpp::g_by_triangular_sum(26, Rational(1, 2)), tlpp::DomainError);
}
