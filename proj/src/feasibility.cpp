#include "ldp/feasibility.hpp"

#include "ldp/discrepancy.hpp"
#include "ldp/error.hpp"
#include "ldp/table1.hpp"

#include <map>

#ifndef LDP_BOGOMOLOV_DEFAULT
#define LDP_BOGOMOLOV_DEFAULT "transcribed"
#endif

namespace ldp {

std::string to_string(BogomolovMode m) { return m == BogomolovMode::Transcribed ? "transcribed" : "pinned"; }

std::string to_string(BogomolovVerdict v) { return v == BogomolovVerdict::Infeasible ? "Infeasible" : "NotExcluded"; }

BogomolovMode parse_bogomolov_mode(std::string_view text) {
  if (text == "transcribed") return BogomolovMode::Transcribed;
  if (text == "pinned") return BogomolovMode::Pinned;
  throw Error(ErrorKind::InvalidArgument, "unknown Bogomolov mode '" + std::string(text) + "'");
}

BogomolovMode default_bogomolov_mode() { return parse_bogomolov_mode(LDP_BOGOMOLOV_DEFAULT); }

Integer local_group_order(const WeightedDualGraph& g) {
  Integer det = graph_determinant(g);
  if (g.shape() != Shape::Star) return det;
  Rational chi = -1;
  Integer prod = 1;
  for (const auto& branch : g.branches()) {
    std::vector<int> w;
    for (std::size_t v : branch) w.push_back(g.weight(v));
    Integer a = graph_determinant(WeightedDualGraph::chain(w));
    chi += ratio(1, a);
    prod *= a;
  }
  if (chi <= 0) throw Error(ErrorKind::UnsupportedConfiguration, format_graph(g) + " is not a quotient singularity");
  Rational order = Rational(4 * det) / (chi * chi * Rational(prod));
  if (!is_integral(order)) throw std::logic_error("non-integral group order for " + format_graph(g));
  return numerator(order);
}

Rational orbifold_defect(const DynkinType& t) {
  Rational s = 0;
  for (const auto& c : t.components()) s += 1 - ratio(1, local_group_order(c));
  return s;
}

bool violates_bogomolov_bound(const DynkinType& t) { return orbifold_defect(t) > 3; }

namespace {

// Reference data: the asserted feasibility over C of 2[2^4] + (dagger) for the
// Table 1 families. Only (dagger) = [3] and [2,4] (families 1 and 2) survive.
const std::map<std::string, BogomolovVerdict>& pinned_table() {
  static const std::map<std::string, BogomolovVerdict> table = [] {
    std::map<std::string, BogomolovVerdict> m;
    for (const auto& inst : table1_enumerate(0, 4, 1, 4, 4)) {
      bool survives = inst.family == 1 || inst.family == 2;
      m[format_dynkin(table1_generate(inst))] = survives ? BogomolovVerdict::NotExcluded : BogomolovVerdict::Infeasible;
    }
    return m;
  }();
  return table;
}

bool is_hunt_excluded(const DynkinType& t) {
  static const std::string excluded = format_dynkin(parse_dynkin("2[2^4]+[2;[2],[3],[5]]"));
  if (format_dynkin(t) != excluded) return false;
  // The exclusion rests on the hunt coefficient at the central curve.
  if (select_hunt_divisor(t).coefficient != ratio(28, 29)) throw std::logic_error("unexpected hunt coefficient");
  return true;
}

}  // namespace

FeasibilityReport feasibility_report(const DynkinType& t, BogomolovMode mode) {
  FeasibilityReport r;
  r.type = t;
  r.n = t.vertex_count();
  r.ktilde_sq = 9 - static_cast<int>(r.n);
  r.k_sq = anticanonical_selfint(t);
  r.index = cartier_index(t);
  r.klt = true;
  for (const auto& c : t.components())
    for (const auto& e : discrepancies(c)) r.klt = r.klt && e < 1;
  r.mode = mode;
  r.note = "ktilde_sq = 9 - n assumes Picard rank one and a rational minimal resolution";
  r.orbifold_defect = orbifold_defect(t);
  r.bogomolov_violated = r.orbifold_defect > 3;

  if (mode == BogomolovMode::Pinned) {
    auto it = pinned_table().find(format_dynkin(t));
    if (it != pinned_table().end()) {
      r.bogomolov = it->second;
      r.exclusion = it->second == BogomolovVerdict::Infeasible ? "pinned" : "none";
      return r;
    }
    r.note += "; not in the pinned table, inequality used";
  }
  if (r.bogomolov_violated) {
    r.bogomolov = BogomolovVerdict::Infeasible;
    r.exclusion = "inequality";
  } else if (is_hunt_excluded(t)) {
    r.bogomolov = BogomolovVerdict::Infeasible;
    r.exclusion = "hunt";
  } else {
    r.bogomolov = BogomolovVerdict::NotExcluded;
    r.exclusion = "none";
  }
  return r;
}

bool kv_vanishing_bound(const Integer& p, const Integer& r, const Rational& k_sq) {
  if (r < 1 || k_sq <= 0) throw Error(ErrorKind::InvalidArgument, "need r >= 1 and K^2 > 0");
  return Rational(p) > Rational(r * (r - 1)) * k_sq;
}

std::optional<Integer> genus_constraint_solvable(const Integer& g, const Rational& k_sq) {
  if (g < 0 || k_sq <= 0) throw Error(ErrorKind::InvalidArgument, "need g >= 0 and K^2 > 0");
  for (Integer n = 1;; ++n) {
    Rational v = k_sq / 2 * Rational(n * (n - 1)) + 1;
    if (v == Rational(g)) return n;
    if (v > Rational(g)) return std::nullopt;
  }
}

}  // namespace ldp
