#pragma once

#include "ldp/graphs.hpp"
#include "ldp/matrix.hpp"
#include "ldp/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ldp {

/// Per-vertex intersection numbers a_i = (C~ . E_i) of a curve with the exceptional curves.
using IncidenceVector = std::vector<int>;

/// Coefficients on the minimal resolution: sigma^*C = C~ + sum d_i E_i,
/// sigma^*K = K~ + sum e_i E_i, b = d + e and log discrepancies f = 1 - b.
struct DiscrepancyData {
  std::vector<Rational> d;
  std::vector<Rational> e;
  std::vector<Rational> b;
  std::vector<Rational> f;
};

/// Precomputed inverse data for one negative definite graph: the integer
/// matrix adj = -det|M| * M^{-1} (nonnegative entries) and det|M| * e.
/// Reusing one solver across many incidence vectors avoids repeated solves.
class DiscrepancySolver {
 public:
  explicit DiscrepancySolver(const WeightedDualGraph& g);

  const WeightedDualGraph& graph() const { return graph_; }
  const Integer& det() const { return det_; }
  const IntMatrix& adj() const { return adj_; }

  std::vector<Rational> discrepancies() const;
  DiscrepancyData pair_coefficients(const IncidenceVector& a) const;
  /// <a, b>
  Rational pairing(const IncidenceVector& a) const;

 private:
  void check(const IncidenceVector& a) const;

  WeightedDualGraph graph_;
  IntMatrix adj_;
  Integer det_;
  std::vector<Integer> scaled_e_;
};

/// Solution of M e = -kappa with kappa_i = weight_i - 2. Throws NotNegativeDefinite.
std::vector<Rational> discrepancies(const WeightedDualGraph& g);

/// Throws NotNegativeDefinite or IndexMismatch.
DiscrepancyData pair_coefficients(const WeightedDualGraph& g, const IncidenceVector& a);

/// <a, b>
Rational incidence_pairing(const WeightedDualGraph& g, const IncidenceVector& a);

/// (K_S + C . C) = 2(pa - 1) + <a, b>. The empty graph (C in the smooth locus) is allowed.
Rational selfint_kc(const WeightedDualGraph& g, const IncidenceVector& a, int pa);

enum class Verdict { LogResolution, AlmostLC_a, AlmostLC_b, AlmostLC_c, Rejected };

std::string to_string(Verdict v);

struct IncidenceClassification {
  Verdict verdict = Verdict::LogResolution;
  /// Other verdicts the graph data cannot rule out.
  std::vector<Verdict> alternatives;
  /// Case label of the support shape: "1a".."1c" for chains, "2a".."2f" for
  /// stars, "none" for a = 0.
  std::string witness;
  Rational pairing;
};

/// Label of the support shape of a on g (see IncidenceClassification::witness).
std::string support_case(const WeightedDualGraph& g, const IncidenceVector& a);

IncidenceClassification classify_incidence(const WeightedDualGraph& g, const IncidenceVector& a);
IncidenceClassification classify_incidence(const DiscrepancySolver& solver, const IncidenceVector& a);

struct ClosedFormValue {
  std::string label;  // "1a", "1b", "2a".."2e" or "central"
  Rational value;
};

/// Closed-form log discrepancies built from determinants of subgraphs. The
/// subgraph determinants are memoized, so one evaluator per graph is cheap to
/// query for many incidence vectors.
class ClosedFormEvaluator {
 public:
  explicit ClosedFormEvaluator(const WeightedDualGraph& g);
  /// Every closed-form expression for f at `vertex` whose configuration matches a.
  std::vector<ClosedFormValue> matches(const IncidenceVector& a, std::size_t vertex) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

std::vector<ClosedFormValue> closed_form_matches(const WeightedDualGraph& g, const IncidenceVector& a,
                                                 std::size_t vertex);

/// First matching closed form. Throws UnsupportedConfiguration if none applies.
Rational closed_form_f(const WeightedDualGraph& g, const IncidenceVector& a, std::size_t vertex);

struct LctResult {
  Rational value;
  /// True when the minimal resolution is a log resolution of the pair.
  bool exact = false;
};

/// min over d_i > 0 of (1 - e_i) / d_i. Throws ZeroIncidence if a = 0.
LctResult lct_min_resolution(const WeightedDualGraph& g, const IncidenceVector& a);

/// Smallest r with r K Cartier: lcm of the denominators of every e_i.
Integer cartier_index(const DynkinType& t);

/// K_S^2 = (9 - n) + sum e_i kappa_i where n is the total vertex count.
Rational anticanonical_selfint(const DynkinType& t);

struct HuntChoice {
  std::size_t component = 0;
  std::size_t vertex = 0;
  Rational coefficient;
};

/// Throws AllDuVal when every component has zero discrepancies.
HuntChoice select_hunt_divisor(const DynkinType& t);

/// Exhaustive check of the incidence lemma over small graphs: for every graph
/// from enumerate_graphs(max_vertices, max_weight) and every nonzero incidence
/// vector with entry sum <= max_a it compares
///   - every applicable closed form for f against the linear solve,
///   - <a,b> <= 2 against the admissible support patterns,
///   - classify_incidence against the <a,b> <= 2 test,
///   - strict monotonicity of <a,b> under lowering one entry of a.
struct IncidenceSweepReport {
  std::size_t graphs = 0;
  std::size_t vectors = 0;
  std::size_t closed_form_checks = 0;
  std::size_t closed_form_mismatches = 0;
  std::size_t pattern_violations = 0;
  std::size_t classifier_disagreements = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t admissible_hits = 0;
  std::map<std::string, std::size_t> closed_form_counts;
  std::vector<std::string> failures;  // first few, for diagnostics

  bool ok() const {
    return closed_form_mismatches == 0 && pattern_violations == 0 && classifier_disagreements == 0 &&
           monotonicity_violations == 0;
  }
};

IncidenceSweepReport incidence_sweep(std::size_t max_vertices, int max_weight, int max_a);

/// Single vertex with a = 1; single-vertex graph with a = 2; the two ends of a
/// chain with a = 1 each.
bool admissible_pattern(const WeightedDualGraph& g, const IncidenceVector& a);

}  // namespace ldp
