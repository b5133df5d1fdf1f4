#include "ldp/verify.hpp"

namespace ldp {

// Expected values of the verify-paper suite. Notation strings may refer to the
// named graphs as {name}.
const Json& default_fixture() {
  static const Json fixture = Json::parse(R"json(
{
  "graphs": {
    "A4": "[2^4]",
    "c3": "[3]",
    "c24": "[2,4]",
    "star235": "[2;[2],[3],[5]]"
  },
  "checks": [
    {"id": "determinant.A4", "kind": "determinant", "graph": "{A4}", "expected": "5"},
    {"id": "determinant.c24", "kind": "determinant", "graph": "{c24}", "expected": "7"},
    {"id": "determinant.star235", "kind": "determinant", "graph": "{star235}", "expected": "29"},
    {"id": "discrepancies.c3", "kind": "discrepancies", "graph": "{c3}", "expected": ["1/3"]},
    {"id": "discrepancies.c24", "kind": "discrepancies", "graph": "{c24}", "expected": ["2/7", "4/7"]},
    {"id": "hunt.2A4_star235", "kind": "hunt_coefficient", "type": "2{A4}+{star235}", "expected": "28/29"},
    {"id": "index.2A4_c3", "kind": "index_ksq", "type": "2{A4}+{c3}", "expected": {"index": "3", "k_sq": "1/3"}},
    {"id": "index.2A4_c24", "kind": "index_ksq", "type": "2{A4}+{c24}", "expected": {"index": "7", "k_sq": "1/7"}},
    {"id": "ksq.2A4", "kind": "k_sq", "type": "2{A4}", "expected": "1"},
    {"id": "ksq.A4", "kind": "k_sq", "type": "{A4}", "expected": "5"},
    {"id": "genus.g5_k5", "kind": "genus_constraint", "g": 5, "k_sq": "5", "expected": null},
    {"id": "vanishing.p5_r3", "kind": "kv_bound", "p": 5, "r": 3, "k_sq": "1/3", "expected": true},
    {"id": "display.c24", "kind": "display", "preset": "[2,4]",
     "expected": {
       "C2.L_ac": "1", "C2.L_bd": "1", "C2.F_a": "1", "C2.F_b": "1", "C2.F_c": "1", "C2.F_d": "1",
       "G1.L_ac": "0", "G1.L_bd": "0", "G1.F_a": "0", "G1.F_b": "0", "G1.F_c": "0", "G1.F_d": "0",
       "-K.L_ac": "3/7", "-K.L_bd": "3/7", "-K.F_a": "3/7", "-K.F_b": "3/7", "-K.F_c": "3/7", "-K.F_d": "3/7",
       "C2.G2": "1", "G1.G2": "1", "-K.G2": "1/7"}},
    {"id": "pullback.G2", "kind": "pullback", "preset": "[2,4]", "class": "G2",
     "expected": {"G2": "1", "G1": "5/7", "C2": "3/7"}},
    {"id": "roundup.G2", "kind": "round_up", "preset": "[2,4]", "class": "G2",
     "expected": {"G2": "1", "G1": "1", "C2": "1"}},
    {"id": "chi.random", "kind": "chi_equality", "seed": 20260131, "count": 20, "expected": {"agree": 20}},
    {"id": "identity.c3", "kind": "pullback_identity", "dagger": "[3]",
     "expected": {"r": 3, "m": 2, "c": 1, "holds": true}},
    {"id": "identity.c24", "kind": "pullback_identity", "dagger": "[2,4]",
     "expected": {"r": 7, "m": 3, "c": 2, "holds": true}},
    {"id": "lemma42.sweep", "kind": "incidence_sweep", "max_vertices": 6, "max_weight": 5, "max_a": 4,
     "expected": {"ok": true, "graphs": 8270, "vectors": 1588964}},
    {"id": "pencil.locus.Q", "kind": "singular_locus", "char": 0, "expected": "s^3*t - 11*s^2*t^2 - s*t^3"},
    {"id": "pencil.locus.reduction", "kind": "locus_reduction", "primes": [7, 11, 13], "expected": [7, 11, 13]},
    {"id": "pencil.double_root", "kind": "double_root", "primes": [2, 5, 7, 11, 13], "expected": [5]},
    {"id": "pencil.cusp.F5", "kind": "classify", "char": 5, "s": "1", "t": "2", "expected": "cusp"},
    {"id": "pencil.nodes.Q", "kind": "classify_quadratic_roots", "expected": ["node", "node"]},
    {"id": "crossratio.polynomials", "kind": "cross_ratio",
     "expected": ["x^2 - 123*x + 1", "121*x^2 - 121*x - 1", "x^2 + 121*x - 121"]},
    {"id": "crossratio.core", "kind": "discriminant_core", "expected": ["5", "5", "5"]},
    {"id": "weighted.D2", "kind": "weighted", "i": 2,
     "expected": {"degree": true, "support": ["[1:0:0:0]"], "smooth": true}},
    {"id": "weighted.D3", "kind": "weighted", "i": 3,
     "expected": {"degree": true, "support": ["[1:0:0:0]"], "smooth": true}},
    {"id": "table1.battery", "kind": "table1_battery", "n_max": 4, "m_max": 4,
     "expected": {"instances": 88, "negative_definite": 88, "klt": 88, "k_sq_positive": 88, "bogomolov_agree": 88}}
  ]
}
)json");
  return fixture;
}

}  // namespace ldp
