#include "ldp/error.hpp"
#include "ldp/pencil.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

using namespace ldp;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Syntax;  // sentinel: nothing thrown
}

// Brute force over P^1(F_p) and P^2(F_p): parameters whose member has an F_p-rational
// singular point. A member with a unique singular point has it rational.
std::set<std::pair<int, int>> brute_singular_parameters(int p) {
  Field f = Field::prime(p);
  std::vector<std::pair<int, int>> params{{0, 1}};
  for (int s = 0; s < p; ++s) params.push_back({1, s});  // [1:s] means s-coordinate 1, t = s
  std::vector<std::array<int, 3>> pts;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) pts.push_back({x, y, 1});
  for (int x = 0; x < p; ++x) pts.push_back({x, 1, 0});
  pts.push_back({1, 0, 0});
  std::set<std::pair<int, int>> out;
  for (auto [s, t] : params) {
    Polynomial m = pencil_member(f, f.from(Rational(s)), f.from(Rational(t)));
    for (const auto& pt : pts) {
      std::vector<FieldElem> e{f.from(Rational(pt[0])), f.from(Rational(pt[1])), f.from(Rational(pt[2]))};
      bool sing = true;
      for (std::size_t i = 0; i < 3 && sing; ++i) sing = f.is_zero(m.derivative(i).evaluate(e));
      if (sing) {
        out.insert({s, t});
        break;
      }
    }
  }
  return out;
}

std::set<std::pair<int, int>> roots_of_binary_form(const Polynomial& g, int p) {
  Field f = Field::prime(p);
  std::set<std::pair<int, int>> out;
  if (f.is_zero(g.evaluate({f.zero(), f.one()}))) out.insert({0, 1});
  for (int t = 0; t < p; ++t)
    if (f.is_zero(g.evaluate({f.one(), f.from(Rational(t))}))) out.insert({1, t});
  return out;
}

}  // namespace

TEST_CASE("base points lie on both generators") {
  Field q = Field::rationals();
  const std::array<std::array<int, 3>, 4> base{{{-1, 1, 1}, {-1, -1, 1}, {1, -1, 1}, {1, 1, 1}}};
  for (const auto& b : base) {
    std::vector<FieldElem> e{q.from(Rational(b[0])), q.from(Rational(b[1])), q.from(Rational(b[2]))};
    CHECK(q.is_zero(pencil_c0(q).evaluate(e)));
    CHECK(q.is_zero(pencil_cinf(q).evaluate(e)));
  }
}

TEST_CASE("singular locus over Q") {
  Polynomial g = pencil_singular_locus(Field::rationals());
  // Reference value from an independent elimination in a computer algebra system.
  CHECK(to_string(g) == "s^3*t - 11*s^2*t^2 - s*t^3");
}

TEST_CASE("singular locus mod p is the reduction of the rational one") {
  Polynomial g = pencil_singular_locus(Field::rationals());
  for (int p : {7, 11, 13}) {
    CAPTURE(p);
    Field f = Field::prime(p);
    CHECK(pencil_singular_locus(f) == g.mapped_to(f));
    auto expected = brute_singular_parameters(p);
    auto roots = roots_of_binary_form(pencil_singular_locus(f), p);
    // Every rational root has a rational singular point, and conversely.
    CHECK(roots == expected);
  }
}

TEST_CASE("singular locus over F_5") {
  Field f = Field::prime(5);
  Polynomial g = pencil_singular_locus(f);
  CHECK(to_string(g) == "s^2*t + 2*s*t^2");
  CHECK(roots_of_binary_form(g, 5) == brute_singular_parameters(5));
  CHECK(kind_of([] { pencil_singular_locus(Field::prime(3)); }) == ErrorKind::BadCharacteristic);
  CHECK(kind_of([] { pencil_singular_locus(Field::prime(2)); }) == ErrorKind::BadCharacteristic);
  CHECK(kind_of([] { pencil_singular_locus(Field::rationals().quadratic(Rational(11), Rational(-1))); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("quadratic factor has a double root only in characteristic 5") {
  for (int p : {2, 5, 7, 11, 13}) {
    CAPTURE(p);
    // Oracle: discriminant 125 vanishes mod p.
    CHECK(quadratic_factor_double_root(Field::prime(p)) == (125 % p == 0));
  }
  CHECK_FALSE(quadratic_factor_double_root(Field::rationals()));
}

TEST_CASE("classification of singular members") {
  Field f5 = Field::prime(5);
  auto cusp = classify_singular_member(f5, f5.one(), f5.from(Rational(2)));
  CHECK(cusp.kind == SingularKind::Cusp);
  Polynomial m = pencil_member(f5, cusp.s, cusp.t);
  for (std::size_t i = 0; i < 3; ++i) CHECK(f5.is_zero(m.derivative(i).evaluate(cusp.point)));

  Field k = Field::rationals().quadratic(Rational(11), Rational(-1));
  for (const FieldElem& root : {k.theta(), k.make(Rational(-11), Rational(-1))}) {
    auto r = classify_singular_member(k, k.one(), root);
    CHECK(r.kind == SingularKind::Node);
    Polynomial mr = pencil_member(k, r.s, r.t);
    for (std::size_t i = 0; i < 3; ++i) CHECK(k.is_zero(mr.derivative(i).evaluate(r.point)));
    // The node lies on the line Z = 0.
    CHECK(k.is_zero(r.point[2]));
  }

  Field f49 = Field::prime(7).quadratic(Rational(4), Rational(6));
  // theta is a root of t^2 + 11t - 1 = t^2 + 4t + 6 mod 7.
  CHECK(classify_singular_member(f49, f49.one(), f49.theta()).kind == SingularKind::Node);

  Field q = Field::rationals();
  // [1:0] is C0, three lines with three crossings.
  CHECK(kind_of([&] { classify_singular_member(q, q.one(), q.zero()); }) == ErrorKind::MultipleSingularPoints);
  CHECK(kind_of([&] { classify_singular_member(q, q.one(), q.one()); }) == ErrorKind::NotSingularMember);
  CHECK(kind_of([&] { classify_singular_member(Field::prime(3), Field::prime(3).one(), Field::prime(3).one()); }) ==
        ErrorKind::BadCharacteristic);
}

TEST_CASE("cross-ratios of the singular parameters") {
  auto mps = cross_ratio_minimal_polynomials();
  std::set<std::string> got;
  for (const auto& p : mps) got.insert(to_string(p));
  // Reference values from an independent computer algebra evaluation of all 24 orderings.
  const std::set<std::string> expected{"x^2 + 123*x + 1", "125*x^2 - 125*x + 1", "x^2 - 125*x + 125"};
  CHECK(got == expected);
  // The orbit is closed under x -> 1/x and x -> 1 - x: check via the reversed and shifted polynomials.
  for (const auto& p : mps) {
    Rational a = p.coeff({2}).a, b = p.coeff({1}).a, c = p.coeff({0}).a;
    // 1 - x: a x^2 + (-2a - b) x + (a + b + c)
    Rational b2 = -2 * a - b, c2 = a + b + c;
    bool found_reverse = false, found_shift = false;
    for (const auto& q : mps) {
      Rational qa = q.coeff({2}).a, qb = q.coeff({1}).a, qc = q.coeff({0}).a;
      // reversed: c x^2 + b x + a
      found_reverse = found_reverse || (qa * b == qb * c && qa * a == qc * c);
      found_shift = found_shift || (qa * b2 == qb * a && qa * c2 == qc * a);
    }
    CHECK(found_reverse);
    CHECK(found_shift);
  }
  for (const auto& p : mps) {
    Integer d = quadratic_discriminant(p);
    CHECK(d == 15125);
    CHECK(squarefree_core(d) == 5);
  }
}

TEST_CASE("cross-ratio set does not depend on the order of the points") {
  Field k = Field::rationals().quadratic(Rational(11), Rational(-1));
  auto pts = pencil_singular_parameters(k);
  auto reference = cross_ratio_minimal_polynomials(k, pts);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    std::vector<std::pair<FieldElem, FieldElem>> q;
    for (int i : perm) q.push_back(pts[i]);
    CHECK(cross_ratio_minimal_polynomials(k, q) == reference);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("squarefree core") {
  CHECK(squarefree_core(49) == 1);
  CHECK(squarefree_core(-12) == -3);
  CHECK(squarefree_core(1) == 1);
  CHECK(kind_of([] { squarefree_core(0); }) == ErrorKind::ZeroInput);
}

TEST_CASE("weighted model members") {
  for (int i : {2, 3}) {
    CAPTURE(i);
    auto r = weighted_member_check(i);
    CHECK(r.degree_ok);
    CHECK(r.support_ok);
    CHECK(r.support == std::vector<std::string>{"[1:0:0:0]"});
    CHECK(r.smooth);
  }
  CHECK(kind_of([] { weighted_model_d(4); }) == ErrorKind::InvalidArgument);
  // t = 0 leaves the cuspidal cubic y^2 = x^3.
  Polynomial f = weighted_model_f();
  Polynomial restricted = f.substitute(f.var_index("t"), f.field().zero());
  CHECK(to_string(restricted) == "4*x^3 + y^2");
}

TEST_CASE("weighted smoothness detects singular curves") {
  Field f = Field::prime(5);
  std::vector<std::string> v{"s", "t", "u"};
  auto s = Polynomial::variable(f, v, "s"), t = Polynomial::variable(f, v, "t"), u = Polynomial::variable(f, v, "u");
  // u^2 = s^2 t^2 is a pair of curves meeting at s = 0 and t = 0.
  CHECK_FALSE(weighted_curve_smooth(u * u - s * s * t * t));
  CHECK(weighted_curve_smooth(u * u - s.pow(4) - t.pow(4)));
  // Passes through [0:0:1].
  CHECK_FALSE(weighted_curve_smooth(u * s * s - t.pow(4)));
}
