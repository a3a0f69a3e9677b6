#pragma once

// JSON (nlohmann) encodings of the library's results. Rationals travel as
// "num/den" strings and doubles as shortest round-trip decimals; the layout
// of every object is listed in docs/output-formats.md.

#include <json.hpp>

#include <string>

#include "tlpp/asymptotics.hpp"
#include "tlpp/high_precision.hpp"
#include "tlpp/percolation.hpp"
#include "tlpp/poly.hpp"
#include "tlpp/rational.hpp"
#include "tlpp/recurrence.hpp"
#include "tlpp/series.hpp"

namespace tlpp {

using Json = nlohmann::json;

/// Shortest decimal that reads back as the same double.
std::string format_double(double x);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const PolyInT& poly);
Json to_json(const TruncatedSeries& s);
Json to_json(const BivariateSeries& s);
Json to_json(const HighPrecisionValue& v);
Json to_json(const MomentTable& m);
Json to_json(const SampleReport& r);
Json to_json(const LimitConstants& c);
Json to_json(const CltSummary& s);

/// {"n": ..., "p": "a/b", "probs": [...]}; p is optional on input.
Json to_json(const WeightDistribution& d, const Rational& p);

/// Parses and validates a distribution. When the object carries "p", every
/// invariant of WeightDistribution::check_invariants is enforced; otherwise
/// only shape, nonnegativity and total mass. Throws DomainError on malformed
/// input and ConsistencyError on violated invariants.
WeightDistribution distribution_from_json(const Json& j);

}  // namespace tlpp
