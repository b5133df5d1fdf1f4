#pragma once

#include "ldp/discrepancy.hpp"
#include "ldp/feasibility.hpp"
#include "ldp/graphs.hpp"
#include "ldp/rational.hpp"

#include <json.hpp>

namespace ldp {

using Json = nlohmann::ordered_json;

/// Rationals are strings "p/q" (or "p" when integral), never numbers.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const std::vector<Rational>& v);
/// Throws Syntax on anything but a string in rational notation.
Rational rational_from_json(const Json& j);

Json to_json(const WeightedDualGraph& g);
Json to_json(const DynkinType& t);
Json to_json(const DiscrepancyData& d);
Json to_json(const HuntChoice& h, const DynkinType& t);
Json to_json(const FeasibilityReport& r);
Json to_json(const IncidenceSweepReport& r);

}  // namespace ldp
