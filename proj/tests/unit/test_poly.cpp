#include <doctest.h>

#include "tlpp/poly.hpp"

using tlpp::PolyInT;
using tlpp::Rational;

TEST_CASE("trailing zeros are trimmed") {
  const PolyInT p({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  CHECK(PolyInT({Rational(0)}).is_zero());
  CHECK(PolyInT().degree() == -1);
  CHECK(p[5] == Rational(0));
}

TEST_CASE("arithmetic") {
  const PolyInT a({Rational(1), Rational(1)});   // 1 + t
  const PolyInT b({Rational(-1), Rational(1)});  // -1 + t
  CHECK(a * b == PolyInT({Rational(-1), Rational(0), Rational(1)}));
  CHECK(a + b == PolyInT({Rational(0), Rational(2)}));
  CHECK((a - a).is_zero());
  CHECK(a * Rational(1, 2) == PolyInT({Rational(1, 2), Rational(1, 2)}));
  CHECK(a.times_t() == PolyInT({Rational(0), Rational(1), Rational(1)}));
  CHECK((a * a).derivative() == PolyInT({Rational(2), Rational(2)}));
  CHECK((a * a * a).truncated(1) == PolyInT({Rational(1), Rational(3)}));
  CHECK(PolyInT::constant(Rational(3)).degree() == 0);
}

TEST_CASE("evaluation and printing") {
  const PolyInT p({Rational(1, 8), Rational(5, 8), Rational(1, 4)});
  CHECK(p.evaluate(Rational(1)) == Rational(1));
  CHECK(p.derivative().evaluate(Rational(1)) == Rational(9, 8));
  CHECK(p.evaluate(Rational(0)) == Rational(1, 8));
  CHECK(p.str() == "1/8 + 5/8 t + 1/4 t^2");
  CHECK(PolyInT().str() == "0");
}
