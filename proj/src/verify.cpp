#include "ldp/verify.hpp"

#include "ldp/error.hpp"
#include "ldp/pencil.hpp"
#include "ldp/picard.hpp"
#include "ldp/table1.hpp"

#include <random>

namespace ldp {

namespace {

class Context {
 public:
  Context(const Json& fixture, const std::map<std::string, std::string>& injections, BogomolovMode mode)
      : mode_(mode) {
    if (fixture.contains("graphs")) {
      for (const auto& [k, v] : fixture["graphs"].items()) graphs_[k] = v.get<std::string>();
    }
    for (const auto& [k, v] : injections) {
      if (!graphs_.count(k)) throw Error(ErrorKind::UnknownName, "no fixture graph named '" + k + "'");
      graphs_[k] = v;
    }
  }

  // Expands {name} references.
  std::string expand(const std::string& text) const {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '{') {
        out += text[i];
        continue;
      }
      auto close = text.find('}', i);
      if (close == std::string::npos) throw Error(ErrorKind::Syntax, "unterminated reference in '" + text + "'");
      auto name = text.substr(i + 1, close - i - 1);
      auto it = graphs_.find(name);
      if (it == graphs_.end()) throw Error(ErrorKind::UnknownName, "no fixture graph named '" + name + "'");
      out += it->second;
      i = close;
    }
    return out;
  }

  DynkinType type(const Json& check, const char* key) const { return parse_dynkin(expand(check.at(key).get<std::string>())); }

  WeightedDualGraph graph(const Json& check) const {
    auto t = type(check, "graph");
    if (t.components().size() != 1) throw Error(ErrorKind::InvalidArgument, "expected a single graph");
    return t.components().front();
  }

  BogomolovMode mode() const { return mode_; }

 private:
  std::map<std::string, std::string> graphs_;
  BogomolovMode mode_;
};

DivisorClass combination(const BlowupLattice& lat, const Json& terms) {
  auto out = DivisorClass::zero(lat.basis());
  for (const auto& [name, c] : terms.items()) out += rational_from_json(c) * lat.curve(name);
  return out;
}

Json evaluate(const Context& ctx, const Json& c) {
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "determinant") return to_json(graph_determinant(ctx.graph(c)));
  if (kind == "discrepancies") return to_json(discrepancies(ctx.graph(c)));
  if (kind == "hunt_coefficient") return to_json(select_hunt_divisor(ctx.type(c, "type")).coefficient);
  if (kind == "index_ksq") {
    auto t = ctx.type(c, "type");
    return Json{{"index", to_json(cartier_index(t))}, {"k_sq", to_json(anticanonical_selfint(t))}};
  }
  if (kind == "k_sq") return to_json(anticanonical_selfint(ctx.type(c, "type")));
  if (kind == "genus_constraint") {
    auto n = genus_constraint_solvable(Integer(c.at("g").get<long long>()), rational_from_json(c.at("k_sq")));
    return n ? to_json(*n) : Json(nullptr);
  }
  if (kind == "kv_bound") {
    return kv_vanishing_bound(Integer(c.at("p").get<long long>()), Integer(c.at("r").get<long long>()),
                              rational_from_json(c.at("k_sq")));
  }
  if (kind == "display") {
    auto lat = preset(c.at("preset").get<std::string>());
    auto mk = -lat.canonical();
    Json out = Json::object();
    for (const char* left : {"C2", "G1"})
      for (const char* x : {"L_ac", "L_bd", "F_a", "F_b", "F_c", "F_d"})
        out[std::string(left) + "." + x] = to_json(lat.dot(lat.curve(left), lat.curve(x)));
    for (const char* x : {"L_ac", "L_bd", "F_a", "F_b", "F_c", "F_d"})
      out[std::string("-K.") + x] = to_json(mumford_pairing(lat, mk, lat.curve(x)));
    out["C2.G2"] = to_json(lat.dot(lat.curve("C2"), lat.curve("G2")));
    out["G1.G2"] = to_json(lat.dot(lat.curve("G1"), lat.curve("G2")));
    out["-K.G2"] = to_json(mumford_pairing(lat, mk, lat.curve("G2")));
    return out;
  }
  if (kind == "pullback" || kind == "round_up") {
    auto lat = preset(c.at("preset").get<std::string>());
    auto dp = pullback_weil_decomposed(lat, lat.curve(c.at("class").get<std::string>()));
    Json out = Json::object();
    out[c.at("class").get<std::string>()] = "1";
    for (std::size_t i = 0; i < dp.curves.size(); ++i) {
      Rational v = kind == "pullback" ? dp.coefficients[i] : Rational(ceil(dp.coefficients[i]));
      if (v != 0) out[dp.curves[i]] = to_json(v);
    }
    // The combination must reproduce the class computed by the library.
    auto whole = kind == "pullback" ? pullback_weil(lat, lat.curve(c.at("class").get<std::string>())) : round_up(lat, dp);
    if (!(combination(lat, out) == whole)) throw std::logic_error("decomposition disagrees with the pullback");
    return out;
  }
  if (kind == "chi_equality") {
    std::mt19937 rng(c.at("seed").get<unsigned>());
    std::uniform_int_distribution<int> dist(-4, 4);
    int agree = 0;
    for (int k = 0; k < c.at("count").get<int>(); ++k) {
      std::vector<Integer> n(6);
      Integer sum = 0;
      for (int i = 0; i < 5; ++i) sum += (n[i] = dist(rng));
      n[5] = -sum;
      auto r = chi_comparison(n);
      agree += r.chi_a == r.chi_aprime;
    }
    return Json{{"agree", agree}};
  }
  if (kind == "pullback_identity") {
    auto id = anticanonical_pullback_identity(c.at("dagger").get<std::string>());
    return Json{{"r", id.r}, {"m", id.m}, {"c", id.c}, {"holds", id.holds()}};
  }
  if (kind == "incidence_sweep") {
    auto r = incidence_sweep(c.at("max_vertices").get<std::size_t>(), c.at("max_weight").get<int>(),
                             c.at("max_a").get<int>());
    return Json{{"ok", r.ok()}, {"graphs", r.graphs}, {"vectors", r.vectors}};
  }
  if (kind == "singular_locus") {
    int p = c.at("char").get<int>();
    return to_string(pencil_singular_locus(p == 0 ? Field::rationals() : Field::prime(p)));
  }
  if (kind == "locus_reduction") {
    Polynomial q = pencil_singular_locus(Field::rationals());
    Json out = Json::array();
    for (int p : c.at("primes").get<std::vector<int>>()) {
      Field f = Field::prime(p);
      if (pencil_singular_locus(f) == q.mapped_to(f)) out.push_back(p);
    }
    return out;
  }
  if (kind == "double_root") {
    Json out = Json::array();
    for (int p : c.at("primes").get<std::vector<int>>())
      if (quadratic_factor_double_root(Field::prime(p))) out.push_back(p);
    return out;
  }
  if (kind == "classify") {
    int p = c.at("char").get<int>();
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    auto r = classify_singular_member(f, f.from(rational_from_json(c.at("s"))), f.from(rational_from_json(c.at("t"))));
    return to_string(r.kind);
  }
  if (kind == "classify_quadratic_roots") {
    Field k = Field::rationals().quadratic(Rational(11), Rational(-1));
    Json out = Json::array();
    for (const auto& root : {k.theta(), k.make(Rational(-11), Rational(-1))})
      out.push_back(to_string(classify_singular_member(k, k.one(), root).kind));
    return out;
  }
  if (kind == "cross_ratio") {
    Json out = Json::array();
    for (const auto& p : cross_ratio_minimal_polynomials()) out.push_back(to_string(p));
    // Compared as sets.
    std::vector<std::string> v = out.get<std::vector<std::string>>();
    std::sort(v.begin(), v.end());
    return v;
  }
  if (kind == "discriminant_core") {
    Json out = Json::array();
    for (const auto& p : cross_ratio_minimal_polynomials()) out.push_back(to_json(squarefree_core(quadratic_discriminant(p))));
    return out;
  }
  if (kind == "weighted") {
    auto r = weighted_member_check(c.at("i").get<int>());
    return Json{{"degree", r.degree_ok}, {"support", r.support_ok ? Json(r.support) : Json(nullptr)}, {"smooth", r.smooth}};
  }
  if (kind == "table1_battery") {
    std::size_t count = 0, nd = 0, klt = 0, pos = 0, agree = 0;
    for (const auto& inst : table1_enumerate(0, c.at("n_max").get<int>(), 1, c.at("m_max").get<int>())) {
      auto t = table1_generate(inst);
      ++count;
      bool all_nd = true;
      for (const auto& g : t.components()) all_nd = all_nd && is_negative_definite(g);
      nd += all_nd;
      if (!all_nd) continue;
      auto r = feasibility_report(t, ctx.mode());
      klt += r.klt;
      pos += r.k_sq > 0;
      bool survives = inst.family == 1 || inst.family == 2;
      agree += (r.bogomolov == BogomolovVerdict::NotExcluded) == survives;
    }
    return Json{{"instances", count}, {"negative_definite", nd}, {"klt", klt}, {"k_sq_positive", pos}, {"bogomolov_agree", agree}};
  }
  throw Error(ErrorKind::Syntax, "unknown check kind '" + kind + "'");
}

// Set comparisons for unordered outputs.
Json normalized_expected(const Json& c) {
  if (c.at("kind") == "cross_ratio") {
    auto v = c.at("expected").get<std::vector<std::string>>();
    std::sort(v.begin(), v.end());
    return v;
  }
  return c.at("expected");
}

}  // namespace

std::vector<VerificationOutcome> run_verification(const Json& fixture, const std::map<std::string, std::string>& injections,
                                                  BogomolovMode mode) {
  if (!fixture.is_object() || !fixture.contains("checks") || !fixture["checks"].is_array()) {
    throw Error(ErrorKind::Syntax, "fixture must be an object with a 'checks' array");
  }
  Context ctx(fixture, injections, mode);
  std::vector<VerificationOutcome> out;
  for (const auto& c : fixture["checks"]) {
    VerificationOutcome o;
    o.id = c.at("id").get<std::string>();
    o.expected = normalized_expected(c);
    try {
      o.actual = evaluate(ctx, c);
      o.pass = o.actual == o.expected;
    } catch (const Error& e) {
      o.actual = nullptr;
      o.error = std::string(to_string(e.kind())) + ": " + e.what();
      o.pass = false;
    }
    out.push_back(std::move(o));
  }
  return out;
}

Json to_json(const VerificationOutcome& o) {
  Json j{{"id", o.id}, {"expected", o.expected}, {"actual", o.actual}, {"status", o.pass ? "Pass" : "Fail"}};
  if (!o.error.empty()) j["error"] = o.error;
  return j;
}

}  // namespace ldp
