#pragma once

#include "ldp/graphs.hpp"
#include "ldp/rational.hpp"

#include <optional>
#include <string>

namespace ldp {

enum class BogomolovMode { Transcribed, Pinned };
enum class BogomolovVerdict { Infeasible, NotExcluded };

std::string to_string(BogomolovMode m);
std::string to_string(BogomolovVerdict v);
/// Accepts "transcribed" or "pinned". Throws InvalidArgument.
BogomolovMode parse_bogomolov_mode(std::string_view text);
/// Mode chosen at configure time (LDP_BOGOMOLOV_MODE cache variable).
BogomolovMode default_bogomolov_mode();

/// Order of the local fundamental group of the quotient singularity with
/// dual graph g: det for chains, 4 det / (chi^2 a1 a2 a3) for stars with
/// branch determinants a_i and chi = 1/a1 + 1/a2 + 1/a3 - 1. Throws
/// UnsupportedConfiguration when chi <= 0 (not a quotient singularity).
Integer local_group_order(const WeightedDualGraph& g);

/// sum over singular points of (1 - 1/|G_p|).
Rational orbifold_defect(const DynkinType& t);

/// Bogomolov bound for rank one log del Pezzo surfaces:
/// sum (1 - 1/|G_p|) <= 3. True when the type violates it.
bool violates_bogomolov_bound(const DynkinType& t);

struct FeasibilityReport {
  DynkinType type;
  std::size_t n = 0;
  /// 9 - n, assuming Picard rank one and a rational minimal resolution.
  int ktilde_sq = 0;
  Rational k_sq;
  Integer index;
  bool klt = false;
  Rational orbifold_defect;
  bool bogomolov_violated = false;
  BogomolovVerdict bogomolov = BogomolovVerdict::NotExcluded;
  BogomolovMode mode = BogomolovMode::Transcribed;
  /// "inequality", "hunt", "pinned" or "none".
  std::string exclusion;
  std::string note;
};

/// Transcribed mode: Infeasible when the inequality fails, and for
/// 2[2^4]+[2;[2],[3],[5]], which satisfies it but is ruled out by the hunt step
/// (hunt coefficient 28/29). Pinned mode: the reference table for Table 1
/// instances with parameters up to 4; other types use the inequality.
/// Throws NotNegativeDefinite.
FeasibilityReport feasibility_report(const DynkinType& t, BogomolovMode mode = default_bogomolov_mode());

/// p > r (r - 1) K^2. Throws InvalidArgument unless r >= 1 and k_sq > 0.
bool kv_vanishing_bound(const Integer& p, const Integer& r, const Rational& k_sq);

/// Positive n with g = (k_sq / 2) n (n - 1) + 1, if any. Throws InvalidArgument
/// unless g >= 0 and k_sq > 0.
std::optional<Integer> genus_constraint_solvable(const Integer& g, const Rational& k_sq);

}  // namespace ldp
