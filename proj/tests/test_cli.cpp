#include "ldp/json_io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

using ldp::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(LDP_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(LDP_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("parse") {
  auto r = run({"parse", "2[2^4]+[3]"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["components"].size() == 3);
  CHECK(run({"parse", "[2"}).code == 2);
  CHECK(run({"parse", "[2;[2],[3]]"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"lemma42"}).code == 2);
  CHECK(run({"pencil", "--char", "3"}).code == 2);
  CHECK(run({"report", "[3]"}, "LDP_BOGOMOLOV_MODE=other").code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report") {
  auto j = Json::parse(run({"report", "2[2^4]+[2,4]"}).out);
  CHECK(j["index"] == "7");
  CHECK(j["k_sq"] == "1/7");
  CHECK(j["hunt"]["vertex_weight"] == 4);
  CHECK(j["hunt"]["coefficient"] == "4/7");

  auto d = Json::parse(run({"report", "2[2^4]"}).out);
  CHECK(d["index"] == "1");
  CHECK(d["k_sq"] == "1");
  CHECK(d["hunt"].is_null());
  for (const auto& c : d["components"])
    for (const auto& e : c["discrepancies"]) CHECK(e == "0");

  auto h = Json::parse(run({"report", "2[2^4]+[2;[2],[3],[5]]"}).out);
  CHECK(h["hunt"]["coefficient"] == "28/29");
  CHECK(h["bogomolov"] == "Infeasible");

  auto p = Json::parse(run({"report", "2[2^4]+[3]"}, "LDP_BOGOMOLOV_MODE=pinned").out);
  CHECK(p["bogomolov_mode"] == "pinned");
  CHECK(p["bogomolov"] == "NotExcluded");
}

TEST_CASE("table1") {
  auto r = run({"table1", "--n", "0..2", "--m", "1..2", "--l", "all"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  // Families: 7 without parameters, 4 in n (3 values), 4 in m (2 values),
  // 3 in l (2 + 4 + 3 values) and 3 in m and l (9 l-values times 2).
  CHECK(j.size() == 7 + 4 * 3 + 4 * 2 + 9 + 9 * 2);
  std::set<std::string> types;
  bool family4_n0 = false;
  for (const auto& e : j) {
    CHECK(types.insert(e["type"].get<std::string>()).second);
    family4_n0 = family4_n0 || (e["family"] == 4 && e["n"] == 0);
  }
  CHECK(family4_n0);
}

TEST_CASE("pencil, cross-ratio and weighted model commands") {
  auto p = Json::parse(run({"pencil", "--char", "5"}).out);
  CHECK(p["singular_locus"] == "s^2*t + 2*s*t^2");
  CHECK(p["quadratic_double_root"] == true);
  bool cusp = false;
  for (const auto& m : p["rational_singular_members"]) cusp = cusp || m["kind"] == "cusp";
  CHECK(cusp);

  auto a = run({"crossratio"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"crossratio"}).out);
  for (const auto& m : Json::parse(a.out)["minimal_polynomials"]) CHECK(m["squarefree_core"] == "5");

  auto w = Json::parse(run({"weighted-model"}).out);
  for (const auto& m : w["members"]) CHECK(m["smooth"] == true);
}

TEST_CASE("lct and lemma42") {
  auto l = Json::parse(run({"lct", "[2,3]", "--a", "1,0"}).out);
  CHECK(l["lct"] == "4/3");
  CHECK(run({"lct", "[2,3]", "--a", "1"}).code == 2);
  auto s = run({"lemma42", "--max-a", "2", "--max-vertices", "3", "--max-weight", "3"});
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["ok"] == true);
}

TEST_CASE("verify-paper exit codes and fault injection") {
  auto good = temp_file("good.json", R"({"graphs": {"s": "[2;[2],[3],[5]]"}, "checks": [
      {"id": "det", "kind": "determinant", "graph": "{s}", "expected": "29"},
      {"id": "hunt", "kind": "hunt_coefficient", "type": "2[2^4]+{s}", "expected": "28/29"},
      {"id": "ksq", "kind": "k_sq", "type": "[2^4]", "expected": "5"}]})");
  auto r = run({"verify-paper", "--fixture", good});
  CHECK(r.code == 0);
  auto j = Json::parse(run({"verify-paper", "--json", "--fixture", good}).out);
  REQUIRE(j.size() == 3);
  for (const auto& o : j) CHECK(o["status"] == "Pass");

  auto bad = Json::parse(run({"verify-paper", "--json", "--fixture", good, "--inject", "s=[3;[2],[3],[5]]"}).out);
  std::set<std::string> failed;
  for (const auto& o : bad)
    if (o["status"] == "Fail") failed.insert(o["id"].get<std::string>());
  CHECK(failed == std::set<std::string>{"det", "hunt"});
  CHECK(run({"verify-paper", "--fixture", good, "--inject", "s=[3;[2],[3],[5]]"}).code == 1);
  CHECK(run({"verify-paper", "--fixture", temp_file("broken.json", "{")}).code == 2);
}
