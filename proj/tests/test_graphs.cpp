#include "ldp/error.hpp"
#include "ldp/graphs.hpp"
#include "ldp/table1.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ldp;

namespace {

WeightedDualGraph star(int c, std::vector<int> b1, std::vector<int> b2, std::vector<int> b3) {
  return WeightedDualGraph::star(c, {b1, b2, b3});
}

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse_dynkin(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse: components and expansion") {
  auto t = parse_dynkin("2[2^4]+[2,4]");
  REQUIRE(t.components().size() == 3);
  CHECK(t.components()[0].weights() == std::vector<int>{2, 2, 2, 2});
  CHECK(t.components()[1].weights() == std::vector<int>{2, 2, 2, 2});
  CHECK(t.components()[2].weights() == std::vector<int>{2, 4});

  auto single = parse_dynkin("[2]");
  REQUIRE(single.components().size() == 1);
  CHECK(single.components()[0].weights() == std::vector<int>{2});

  auto s = parse_dynkin("[2;[2],[3],[5]]");
  REQUIRE(s.components().size() == 1);
  const auto& g = s.components()[0];
  CHECK(g.shape() == Shape::Star);
  CHECK(g.weight(g.center()) == 2);
  CHECK(g.weights() == std::vector<int>{2, 2, 3, 5});
}

TEST_CASE("parse: whitespace, empty runs and dropped items") {
  CHECK(parse_dynkin(" 2 [ 2 ^ 4 ] + [ 3 ] ") == parse_dynkin("2[2^4]+[3]"));
  CHECK(parse_dynkin("[2^0,3]+[3,2,5]") == parse_dynkin("[3]+[3,2,5]"));
  CHECK(parse_dynkin("[2^0]+[3]") == parse_dynkin("[3]"));
  CHECK(parse_dynkin("[3,2^0,3]") == parse_dynkin("[3,3]"));
  // A star with an empty branch is a chain through its center.
  CHECK(parse_dynkin("[2;[2^0],[3],[5]]") == parse_dynkin("[3,2,5]"));
}

TEST_CASE("parse: errors carry byte offsets") {
  CHECK(parse_error_offset("[2") == 2);
  CHECK(parse_error_offset("[1]") == 1);
  CHECK(parse_error_offset("1[2]") == 0);
  CHECK(parse_error_offset("[2;[2],[3]]") == 10);
  CHECK(parse_error_offset("[2;[2],[3],[5],[7]]") == 14);
  CHECK(parse_error_offset("[2,x]") == 3);
  CHECK(parse_error_offset("") == 0);
  CHECK(parse_error_offset("[2]+") == 4);
  CHECK(parse_error_offset("[2][3]") == 3);
  CHECK_THROWS_AS(parse_dynkin("[2;[2],[3]]"), ParseError);
}

TEST_CASE("intersection matrix") {
  IntMatrix m = intersection_matrix(WeightedDualGraph::chain({2, 4}));
  CHECK(m(0, 0) == -2);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(1, 1) == -4);
  CHECK(intersection_matrix(WeightedDualGraph::chain({2}))(0, 0) == -2);

  auto s = star(2, {2}, {3}, {5});
  IntMatrix ms = intersection_matrix(s);
  CHECK(ms(0, 0) == -2);
  CHECK(ms(1, 1) == -2);
  CHECK(ms(2, 2) == -3);
  CHECK(ms(3, 3) == -5);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(ms(0, i) == 1);
    CHECK(ms(i, 0) == 1);
  }
  CHECK(ms(1, 2) == 0);
}

TEST_CASE("determinants against independent oracles") {
  CHECK(graph_determinant(WeightedDualGraph::chain({2, 2, 2, 2})) == oracle::chain_det({2, 2, 2, 2}));
  CHECK(oracle::chain_det({2, 2, 2, 2}) == 5);
  CHECK(graph_determinant(WeightedDualGraph::chain({2, 4})) == 7);
  auto s = star(2, {2}, {3}, {5});
  CHECK(graph_determinant(s) == abs(oracle::cofactor_det(oracle::graph_rows(s))));
  CHECK(graph_determinant(s) == 29);
  CHECK(graph_determinant(WeightedDualGraph()) == 1);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(WeightedDualGraph::chain({2, 4})));
  CHECK(is_negative_definite(WeightedDualGraph()));
  CHECK(is_negative_definite(star(2, {2}, {2}, {2})));
  IntMatrix bad(2, 2);
  bad(0, 0) = -1;
  bad(0, 1) = 2;
  bad(1, 0) = 2;
  bad(1, 1) = -1;
  CHECK_FALSE(is_negative_definite(bad));
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(WeightedDualGraph::chain({1, 2}), Error);
  std::vector<Vertex> vs{{"a", 2}, {"b", 2}, {"c", 2}};
  CHECK_THROWS_AS(WeightedDualGraph(vs, {{0, 1}, {1, 2}, {0, 2}}), Error);  // cycle
  CHECK_THROWS_AS(WeightedDualGraph(vs, {{0, 1}}), Error);                  // disconnected
  CHECK_THROWS_AS(WeightedDualGraph(vs, {{0, 0}, {1, 2}}), Error);          // loop
  CHECK_THROWS_AS(WeightedDualGraph(vs, {{0, 1}, {1, 0}}), Error);          // multi-edge
  auto g = WeightedDualGraph(vs, {{2, 1}, {0, 2}});
  CHECK(g.shape() == Shape::Chain);
  CHECK(g.chain_order() == std::vector<std::size_t>{0, 2, 1});
}

TEST_CASE("canonical ordering") {
  CHECK(WeightedDualGraph::chain({4, 2}).canonical().weights() == std::vector<int>{2, 4});
  auto s = star(2, {5}, {3, 2}, {2}).canonical();
  CHECK(format_graph(s) == "[2;[2],[5],[3,2]]");
  CHECK(format_dynkin(parse_dynkin("[3]+[2,2,2,2]+[2^4]")) == "2[2^4]+[3]");
  CHECK(format_dynkin(parse_dynkin("[2;[2],[3],[5]]+[2,2]")) == "[2;[2],[3],[5]]+[2,2]");
}

TEST_CASE("exhaustive: negative definite, determinant >= 2, Hirzebruch-Jung recurrence") {
  auto graphs = oracle::all_graphs(6, 6);
  CHECK(graphs.size() > 1000);
  for (const auto& g : graphs) {
    CHECK(is_negative_definite(g));
    Integer det = graph_determinant(g);
    CHECK(det >= 2);
    CHECK(det == abs(oracle::cofactor_det(oracle::graph_rows(g))));
    if (g.shape() == Shape::Chain) CHECK(det == oracle::chain_det(g.weights()));
  }
}

TEST_CASE("round trip of canonical forms") {
  auto graphs = oracle::all_graphs(5, 4);
  for (std::size_t i = 0; i < graphs.size(); i += 7) {
    std::vector<WeightedDualGraph> parts{graphs[i], graphs[(i * 13 + 5) % graphs.size()], graphs[i]};
    DynkinType t(parts);
    std::string text = format_dynkin(t);
    CHECK(parse_dynkin(text) == t);
    CHECK(format_dynkin(parse_dynkin(text)) == text);
  }
}

TEST_CASE("determinant is multiplicative over components") {
  auto graphs = oracle::all_graphs(4, 4);
  for (std::size_t i = 0; i + 2 < graphs.size(); i += 11) {
    DynkinType t({graphs[i], graphs[i + 1], graphs[i + 2]});
    Integer product = 1;
    for (const auto& c : t.components()) product *= graph_determinant(c);
    CHECK(abs(determinant(t.intersection_matrix())) == product);
  }
}

TEST_CASE("table1 generation") {
  CHECK(table1_generate({4, {0, 1, 1}}) == parse_dynkin("2[2^4]+[2;[2],[3],[5]]"));
  CHECK(table1_generate({1, {}}) == parse_dynkin("2[2^4]+[3]"));
  CHECK(table1_generate({16, {0, 1, 2}}) == parse_dynkin("2[2^4]+[2,2,7]+[2;[2],[3],[4]]"));
  CHECK(table1_generate({9, {0, 1, 1}}) == parse_dynkin("2[2^4]+[3,3]+[3;[2],[3],[5]]"));
  CHECK(table1_generate({11, {0, 3, 2}}) == parse_dynkin("2[2^4]+[4,2,2,4]+[5;[2],[2,2],[5]]"));
  CHECK(table1_dagger({5, {0, 1, 1}}) == "[2^0,3]+[3,2,5]");
  CHECK_THROWS_AS(table1_generate({10, {0, 1, 3}}), Error);
  CHECK_THROWS_AS(table1_generate({9, {0, 0, 1}}), Error);
  CHECK_THROWS_AS(table1_generate({4, {-1, 1, 1}}), Error);
  CHECK_THROWS_AS(table1_generate({22, {}}), Error);
  try {
    table1_generate({10, {0, 1, 3}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParamOutOfRange);
  }
  CHECK(table1_families().size() == 21);
}

TEST_CASE("table1 enumeration counts") {
  // 7 families without parameters, 4 in n, 4 in m, 3 in l only and 3 in (m, l)
  // with l ranges of sizes 2, 4, 3.
  auto box = table1_enumerate(0, 2, 1, 2);
  std::size_t expected = 7 + 4 * 3 + 4 * 2 + (2 + 4 + 3) + (2 + 4 + 3) * 2;
  CHECK(box.size() == expected);
  for (const auto& inst : box) CHECK_NOTHROW(table1_generate(inst));
}
