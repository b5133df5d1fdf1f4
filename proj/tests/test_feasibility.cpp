#include "ldp/error.hpp"
#include "ldp/feasibility.hpp"
#include "ldp/table1.hpp"

#include <doctest.h>

using namespace ldp;

namespace {

DynkinType T(const char* s) { return parse_dynkin(s); }

// Independent oracle: group orders of the binary polyhedral groups and cyclic groups.
Integer binary_polyhedral_order(int p, int q, int r) {
  if (p == 2 && q == 2) return 4 * r;     // binary dihedral of D_{r+2}
  if (p == 2 && q == 3 && r == 3) return 24;
  if (p == 2 && q == 3 && r == 4) return 48;
  if (p == 2 && q == 3 && r == 5) return 120;
  return 0;
}

}  // namespace

TEST_CASE("local group orders") {
  CHECK(local_group_order(WeightedDualGraph::chain({2, 2, 2, 2})) == 5);
  CHECK(local_group_order(WeightedDualGraph::chain({3})) == 3);
  CHECK(local_group_order(WeightedDualGraph::chain({2, 4})) == 7);
  // Du Val stars: D_n and E_6, E_7, E_8 with all weights two.
  for (int n = 4; n <= 8; ++n) {
    auto g = WeightedDualGraph::star(2, {std::vector<int>{2}, std::vector<int>{2}, std::vector<int>(n - 3, 2)});
    CHECK(local_group_order(g) == binary_polyhedral_order(2, 2, n - 2));
  }
  CHECK(local_group_order(WeightedDualGraph::star(2, {std::vector<int>{2}, std::vector<int>{2, 2}, std::vector<int>{2, 2}})) ==
        binary_polyhedral_order(2, 3, 3));
  CHECK(local_group_order(WeightedDualGraph::star(2, {std::vector<int>{2}, std::vector<int>{2, 2}, std::vector<int>{2, 2, 2}})) ==
        binary_polyhedral_order(2, 3, 4));
  CHECK(local_group_order(WeightedDualGraph::star(2, {std::vector<int>{2}, std::vector<int>{2, 2}, std::vector<int>{2, 2, 2, 2}})) ==
        binary_polyhedral_order(2, 3, 5));
  // [2;[2],[3],[5]]: det 29, branches (2,3,5).
  CHECK(local_group_order(parse_dynkin("[2;[2],[3],[5]]").components()[0]) == 4 * 29 * 30);
  // Branch determinants (2,3,7): not a quotient singularity.
  auto bad = WeightedDualGraph::star(2, {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{7}});
  CHECK_THROWS_AS(local_group_order(bad), Error);
}

TEST_CASE("feasibility report examples") {
  auto r = feasibility_report(T("2[2^4]+[2]+[3]+[5]"), BogomolovMode::Transcribed);
  CHECK(r.bogomolov == BogomolovVerdict::Infeasible);
  CHECK(r.exclusion == "inequality");
  // 8/5 + 1/2 + 2/3 + 4/5
  CHECK(r.orbifold_defect == Rational(8, 5) + Rational(1, 2) + Rational(2, 3) + Rational(4, 5));

  auto a = feasibility_report(T("2[2^4]+[3]"), BogomolovMode::Transcribed);
  CHECK(a.bogomolov == BogomolovVerdict::NotExcluded);
  CHECK(a.k_sq == Rational(1, 3));
  CHECK(a.index == 3);
  CHECK(a.n == 9);
  CHECK(a.ktilde_sq == 0);
  CHECK(a.klt);

  auto b = feasibility_report(T("2[2^4]+[2,4]"), BogomolovMode::Transcribed);
  CHECK(b.bogomolov == BogomolovVerdict::NotExcluded);
  CHECK(b.k_sq == Rational(1, 7));
  CHECK(b.index == 7);

  auto h = feasibility_report(T("2[2^4]+[2;[2],[3],[5]]"), BogomolovMode::Transcribed);
  CHECK_FALSE(h.bogomolov_violated);
  CHECK(h.bogomolov == BogomolovVerdict::Infeasible);
  CHECK(h.exclusion == "hunt");

  auto d = feasibility_report(T("2[2^4]"), BogomolovMode::Transcribed);
  CHECK(d.k_sq == 1);
  CHECK(d.index == 1);
  CHECK(feasibility_report(T("[2^4]")).k_sq == 5);

  CHECK_THROWS_AS(feasibility_report(T("[1]")), Error);
}

TEST_CASE("pinned mode agrees with the inequality on Table 1") {
  for (const auto& inst : table1_enumerate(0, 4, 1, 4, 4)) {
    auto t = table1_generate(inst);
    CAPTURE(format_dynkin(t));
    auto p = feasibility_report(t, BogomolovMode::Pinned);
    auto q = feasibility_report(t, BogomolovMode::Transcribed);
    CHECK(p.bogomolov == q.bogomolov);
    bool survives = inst.family == 1 || inst.family == 2;
    CHECK((p.bogomolov == BogomolovVerdict::NotExcluded) == survives);
    CHECK(p.klt);
    CHECK(p.k_sq > 0);
    CHECK(is_integral(p.k_sq * Rational(p.index * p.index)));
  }
}

TEST_CASE("mode parsing") {
  CHECK(parse_bogomolov_mode("pinned") == BogomolovMode::Pinned);
  CHECK(to_string(parse_bogomolov_mode("transcribed")) == "transcribed");
  CHECK_THROWS_AS(parse_bogomolov_mode("other"), Error);
}

TEST_CASE("vanishing bound") {
  CHECK(kv_vanishing_bound(5, 3, Rational(1, 3)));
  CHECK_FALSE(kv_vanishing_bound(5, 7, Rational(1, 7)));
  CHECK(kv_vanishing_bound(2, 1, Rational(1000)));
  CHECK_THROWS_AS(kv_vanishing_bound(5, 0, Rational(1)), Error);
  CHECK_THROWS_AS(kv_vanishing_bound(5, 2, Rational(0)), Error);
  // Monotone in p and in r(r-1)K^2.
  for (int p = 2; p < 40; ++p)
    for (int r = 1; r < 8; ++r)
      for (int k = 1; k < 6; ++k) {
        Rational ks = ratio(k, 3);
        if (kv_vanishing_bound(p, r, ks)) CHECK(kv_vanishing_bound(p + 1, r, ks));
        if (!kv_vanishing_bound(p, r, ks)) CHECK_FALSE(kv_vanishing_bound(p, r + 1, ks));
      }
}

TEST_CASE("genus constraint") {
  CHECK_FALSE(genus_constraint_solvable(5, 5));
  CHECK(genus_constraint_solvable(1, 5) == Integer(1));
  CHECK(genus_constraint_solvable(6, 5) == Integer(2));
  CHECK(genus_constraint_solvable(16, 5) == Integer(3));
  CHECK_THROWS_AS(genus_constraint_solvable(-1, 5), Error);
}
