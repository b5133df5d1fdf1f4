#include "ldp/discrepancy.hpp"
#include "ldp/error.hpp"
#include "ldp/feasibility.hpp"
#include "ldp/json_io.hpp"
#include "ldp/pencil.hpp"
#include "ldp/table1.hpp"
#include "ldp/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

using namespace ldp;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

BogomolovMode mode_from_env() {
  const char* env = std::getenv("LDP_BOGOMOLOV_MODE");
  return env && *env ? parse_bogomolov_mode(env) : default_bogomolov_mode();
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad range '" + text + "', expected N or LO..HI");
  }
}

WeightedDualGraph single_graph(const std::string& text) {
  auto t = parse_dynkin(text);
  if (t.components().size() != 1) throw Error(ErrorKind::InvalidArgument, "expected a single graph");
  return t.components().front();
}

std::vector<int> parse_incidence(const std::string& text) {
  std::vector<int> a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      a.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad incidence vector '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return a;
}

int cmd_parse(const std::string& text) {
  print(to_json(parse_dynkin(text)));
  return kOk;
}

int cmd_det(const std::string& text) {
  auto t = parse_dynkin(text);
  Json comps = Json::array();
  Integer total = 1;
  for (const auto& g : t.components()) {
    Integer d = graph_determinant(g);
    total *= d;
    comps.push_back(Json{{"notation", format_graph(g)}, {"determinant", to_json(d)}});
  }
  print(Json{{"notation", format_dynkin(t)}, {"components", comps}, {"determinant", to_json(total)}});
  return kOk;
}

Json hunt_json(const DynkinType& t) {
  try {
    return to_json(select_hunt_divisor(t), t);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::AllDuVal) return nullptr;
    throw;
  }
}

int cmd_report(const std::string& text) {
  auto t = parse_dynkin(text);
  Json j = to_json(feasibility_report(t, mode_from_env()));
  Json comps = Json::array();
  for (const auto& g : t.components())
    comps.push_back(Json{{"notation", format_graph(g)}, {"determinant", to_json(graph_determinant(g))}, {"discrepancies", to_json(discrepancies(g))}});
  j["components"] = comps;
  j["hunt"] = hunt_json(t);
  print(j);
  return kOk;
}

int cmd_lct(const std::string& text, const std::string& a_text) {
  auto g = single_graph(text);
  auto a = parse_incidence(a_text);
  auto r = lct_min_resolution(g, a);
  auto c = classify_incidence(g, a);
  print(Json{{"graph", format_graph(g)},
             {"a", a},
             {"lct", to_json(r.value)},
             {"exact", r.exact},
             {"coefficients", to_json(pair_coefficients(g, a))},
             {"pairing", to_json(c.pairing)},
             {"verdict", to_string(c.verdict)},
             {"case", c.witness}});
  return kOk;
}

int cmd_lemma42(int max_a, std::size_t max_vertices, int max_weight) {
  auto r = incidence_sweep(max_vertices, max_weight, max_a);
  print(to_json(r));
  return r.ok() ? kOk : kVerifyFailed;
}

int cmd_hunt(const std::string& text) {
  auto t = parse_dynkin(text);
  auto h = select_hunt_divisor(t);
  print(to_json(h, t));
  return kOk;
}

int cmd_table1(const std::string& n_range, const std::string& m_range, const std::string& l_range) {
  auto [n_lo, n_hi] = parse_range(n_range);
  auto [m_lo, m_hi] = parse_range(m_range);
  std::optional<int> l_lo, l_hi;
  if (l_range != "all") {
    auto [lo, hi] = parse_range(l_range);
    l_lo = lo;
    l_hi = hi;
  }
  Json out = Json::array();
  std::set<std::string> seen;
  for (const auto& inst : table1_enumerate(n_lo, n_hi, m_lo, m_hi, l_hi)) {
    if (l_lo && table1_family(inst.family).uses_l && inst.params.l < *l_lo) continue;
    auto t = table1_generate(inst);
    auto key = format_dynkin(t);
    if (!seen.insert(key).second) continue;
    out.push_back(Json{{"family", inst.family},
                       {"n", inst.params.n},
                       {"m", inst.params.m},
                       {"l", inst.params.l},
                       {"dagger", table1_dagger(inst)},
                       {"type", key}});
  }
  print(out);
  return kOk;
}

Json member_json(const Field& f, const FieldElem& s, const FieldElem& t) {
  Json j{{"s", f.format(s)}, {"t", f.format(t)}};
  try {
    auto r = classify_singular_member(f, s, t);
    Json pt = Json::array();
    for (const auto& x : r.point) pt.push_back(f.format(x));
    j["point"] = pt;
    j["kind"] = to_string(r.kind);
  } catch (const Error& e) {
    j["kind"] = nullptr;
    j["error"] = std::string(to_string(e.kind()));
  }
  return j;
}

int cmd_pencil(int p) {
  Field f = p == 0 ? Field::rationals() : Field::prime(p);
  Polynomial locus = pencil_singular_locus(f);
  Json members = Json::array();
  if (p == 0) {
    members.push_back(member_json(f, f.zero(), f.one()));
    members.push_back(member_json(f, f.one(), f.zero()));
    Field k = f.quadratic(Rational(11), Rational(-1));
    for (const auto& root : {k.theta(), k.make(Rational(-11), Rational(-1))}) {
      Json m = member_json(k, k.one(), root);
      m["field"] = k.name();
      members.push_back(m);
    }
  } else {
    if (f.is_zero(locus.evaluate({f.zero(), f.one()}))) members.push_back(member_json(f, f.zero(), f.one()));
    for (int t = 0; t < p; ++t) {
      FieldElem tv = f.from(Rational(t));
      if (f.is_zero(locus.evaluate({f.one(), tv}))) members.push_back(member_json(f, f.one(), tv));
    }
  }
  print(Json{{"field", f.name()},
             {"c0", to_string(pencil_c0(f))},
             {"cinf", to_string(pencil_cinf(f))},
             {"singular_locus", to_string(locus)},
             {"quadratic_double_root", quadratic_factor_double_root(f)},
             {"rational_singular_members", members}});
  return kOk;
}

int cmd_crossratio() {
  Json polys = Json::array();
  for (const auto& q : cross_ratio_minimal_polynomials()) {
    Integer d = quadratic_discriminant(q);
    polys.push_back(Json{{"polynomial", to_string(q)}, {"discriminant", to_json(d)}, {"squarefree_core", to_json(squarefree_core(d))}});
  }
  print(Json{{"points", "0, infinity and the roots of t^2 + 11t - 1"}, {"minimal_polynomials", polys}});
  return kOk;
}

int cmd_weighted() {
  Json checks = Json::array();
  for (int i : {2, 3}) {
    auto r = weighted_member_check(i);
    checks.push_back(Json{{"i", i},
                          {"D", to_string(weighted_model_d(i))},
                          {"degree_ok", r.degree_ok},
                          {"support_ok", r.support_ok},
                          {"support", r.support},
                          {"smooth", r.smooth}});
  }
  print(Json{{"field", "F_5"}, {"weights", {1, 1, 2, 3}}, {"F", to_string(weighted_model_f())}, {"members", checks}});
  return kOk;
}

int cmd_verify(bool json, const std::string& fixture_path, const std::vector<std::string>& injections) {
  Json fixture = default_fixture();
  if (!fixture_path.empty()) {
    std::ifstream in(fixture_path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read fixture '" + fixture_path + "'");
    try {
      fixture = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Syntax, std::string("fixture: ") + e.what());
    }
  }
  std::map<std::string, std::string> inject;
  for (const auto& s : injections) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected NAME=NOTATION, got '" + s + "'");
    inject[s.substr(0, eq)] = s.substr(eq + 1);
  }
  auto outcomes = run_verification(fixture, inject, mode_from_env());
  std::size_t failed = 0;
  for (const auto& o : outcomes) failed += !o.pass;
  if (json) {
    Json arr = Json::array();
    for (const auto& o : outcomes) arr.push_back(to_json(o));
    print(arr);
  } else {
    for (const auto& o : outcomes) {
      std::cout << (o.pass ? "PASS " : "FAIL ") << o.id;
      if (!o.pass) {
        std::cout << "  expected " << o.expected.dump() << " actual " << o.actual.dump();
        if (!o.error.empty()) std::cout << " (" << o.error << ")";
      }
      std::cout << "\n";
    }
    std::cout << outcomes.size() - failed << "/" << outcomes.size() << " checks passed\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual graph, Picard lattice and cubic pencil computations for rank one log del Pezzo surfaces"};
  app.require_subcommand(1);

  std::string notation, a_text, n_range = "0..2", m_range = "1..2", l_range = "all", fixture;
  int max_a = 4, max_weight = 5, p = 0;
  std::size_t max_vertices = 6;
  bool json = false;
  std::vector<std::string> injections;
  std::function<int()> run;

  auto* parse = app.add_subcommand("parse", "Parse Dynkin notation and print the graphs");
  parse->add_option("notation", notation)->required();
  parse->callback([&] { run = [&] { return cmd_parse(notation); }; });

  auto* det = app.add_subcommand("det", "Determinants of the components");
  det->add_option("notation", notation)->required();
  det->callback([&] { run = [&] { return cmd_det(notation); }; });

  auto* report = app.add_subcommand("report", "Feasibility report, discrepancies and hunt divisor");
  report->add_option("notation", notation)->required();
  report->callback([&] { run = [&] { return cmd_report(notation); }; });

  auto* lct = app.add_subcommand("lct", "Log canonical threshold of a curve meeting one graph");
  lct->add_option("graph", notation)->required();
  lct->add_option("--a", a_text, "Incidence vector, comma separated, in the printed vertex order")->required();
  lct->callback([&] { run = [&] { return cmd_lct(notation, a_text); }; });

  auto* lemma42 = app.add_subcommand("lemma42", "Exhaustive incidence check over small graphs");
  lemma42->add_option("--max-a", max_a, "Bound on the entry sum of a")->required();
  lemma42->add_option("--max-vertices", max_vertices)->capture_default_str();
  lemma42->add_option("--max-weight", max_weight)->capture_default_str();
  lemma42->callback([&] { run = [&] { return cmd_lemma42(max_a, max_vertices, max_weight); }; });

  auto* hunt = app.add_subcommand("hunt", "Hunt divisor selection");
  hunt->add_option("notation", notation)->required();
  hunt->callback([&] { run = [&] { return cmd_hunt(notation); }; });

  auto* table1 = app.add_subcommand("table1", "Enumerate 2[2^4] + (dagger) over parameter ranges");
  table1->add_option("--n", n_range, "N or LO..HI")->capture_default_str();
  table1->add_option("--m", m_range, "N or LO..HI")->capture_default_str();
  table1->add_option("--l", l_range, "all, N or LO..HI")->capture_default_str();
  table1->callback([&] { run = [&] { return cmd_table1(n_range, m_range, l_range); }; });

  auto* pencil = app.add_subcommand("pencil", "Singular members of the cubic pencil");
  pencil->add_option("--char", p, "0 for Q, otherwise a prime")->required();
  pencil->callback([&] { run = [&] { return cmd_pencil(p); }; });

  auto* cross = app.add_subcommand("crossratio", "Cross-ratio minimal polynomials of the singular parameters");
  cross->callback([&] { run = [&] { return cmd_crossratio(); }; });

  auto* weighted = app.add_subcommand("weighted-model", "Checks on the weighted model over F_5");
  weighted->callback([&] { run = [&] { return cmd_weighted(); }; });

  auto* verify = app.add_subcommand("verify-paper", "Run the golden verification suite");
  verify->add_flag("--json", json, "Machine-readable outcome array");
  verify->add_option("--fixture", fixture, "Alternative fixture file");
  verify->add_option("--inject", injections, "Replace a fixture graph: NAME=NOTATION");
  verify->callback([&] { run = [&] { return cmd_verify(json, fixture, injections); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
}
