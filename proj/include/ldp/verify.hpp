#pragma once

#include "ldp/feasibility.hpp"
#include "ldp/json_io.hpp"

#include <map>
#include <string>
#include <vector>

namespace ldp {

struct VerificationOutcome {
  std::string id;
  Json expected;
  Json actual;
  /// expected == actual, compared as JSON values.
  bool pass = false;
  /// Set when the check threw instead of producing a value.
  std::string error;
};

/// The built-in fixture: named graphs and the list of checks with their expected values.
const Json& default_fixture();

/// Runs every check in the fixture in order. `injections` replaces named graphs
/// of the fixture before the checks are evaluated (fault injection).
/// Throws Syntax on a malformed fixture and UnknownName for an unknown graph name.
std::vector<VerificationOutcome> run_verification(const Json& fixture,
                                                  const std::map<std::string, std::string>& injections = {},
                                                  BogomolovMode mode = default_bogomolov_mode());

Json to_json(const VerificationOutcome& o);

}  // namespace ldp
