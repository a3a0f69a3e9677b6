#include <doctest.h>

#include "tlpp/error.hpp"
#include "tlpp/verify.hpp"

TEST_CASE("clean build passes every check") {
  const auto report = tlpp::run_verify({});
  CHECK(report.ok());
  CHECK(report.checks.size() == 24);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.comparisons > 0);
    CHECK(c.detail.empty());
  }
}

TEST_CASE("each injected fault is caught") {
  for (auto name : tlpp::fault_route_names()) {
    if (name == "none") continue;
    CAPTURE(name);
    tlpp::VerifyOptions o;
    o.fault = tlpp::parse_fault_route(name);
    const auto report = tlpp::run_verify(o);
    CHECK(!report.ok());
  }
}

TEST_CASE("options") {
  tlpp::VerifyOptions o;
  o.n_max = 10;
  o.probabilities = {tlpp::Rational(1, 5)};
  CHECK(tlpp::run_verify(o).ok());
  o.n_max = 0;
  CHECK_THROWS_AS(tlpp::run_verify(o), tlpp::DomainError);
  CHECK_THROWS_AS(tlpp::parse_fault_route("nowhere"), tlpp::DomainError);
}
