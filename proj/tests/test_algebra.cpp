#include "ldp/error.hpp"
#include "ldp/field.hpp"
#include "ldp/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace ldp;

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK(f.from(Rational(10)) == f.from(Rational(3)));
  CHECK(f.from(Rational(1, 3)) == f.from(Rational(5)));
  for (int a = 1; a < 7; ++a) CHECK(f.mul(f.from(Rational(a)), f.inv(f.from(Rational(a)))) == f.one());
  CHECK_THROWS_AS(f.from(Rational(1, 7)), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK(f.name() == "F_7");
}

TEST_CASE("quadratic extensions") {
  Field q = Field::rationals().quadratic(Rational(11), Rational(-1));
  FieldElem th = q.theta();
  // theta^2 + 11 theta - 1 = 0
  CHECK(q.is_zero(q.add(q.add(q.mul(th, th), q.mul(q.from(Rational(11)), th)), q.from(Rational(-1)))));
  CHECK(q.norm(th) == -1);
  CHECK(q.trace(th) == -11);
  CHECK(q.mul(th, q.inv(th)) == q.one());
  CHECK_THROWS_AS(Field::rationals().quadratic(Rational(0), Rational(-4)), Error);
  CHECK_THROWS_AS(q.quadratic(Rational(0), Rational(1)), Error);

  Field f49 = Field::prime(7).quadratic(Rational(4), Rational(6));
  CHECK(f49.name() == "F_7[t]/(t^2+4t+6)");
  // Multiplicative group of order 48: every nonzero element satisfies x^48 = 1.
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      if (a == 0 && b == 0) continue;
      FieldElem x = f49.make(Rational(a), Rational(b));
      CHECK(f49.pow(x, 48) == f49.one());
      CHECK(f49.mul(x, f49.inv(x)) == f49.one());
    }
  CHECK_THROWS_AS(Field::prime(5).quadratic(Rational(0), Rational(-4)), Error);
}

TEST_CASE("polynomial arithmetic") {
  Field q = Field::rationals();
  std::vector<std::string> v{"x", "y"};
  auto x = Polynomial::variable(q, v, "x"), y = Polynomial::variable(q, v, "y");
  auto one = Polynomial::constant(q, v, Rational(1));
  auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(to_string(p) == "x^2 - y^2");
  CHECK(to_string((x + one).pow(2)) == "x^2 + 2*x + 1");
  CHECK(p.derivative(0) == x + x);
  CHECK(p.substitute(1, x) .is_zero());
  CHECK(p.evaluate({q.from(Rational(3)), q.from(Rational(2))}) == q.from(Rational(5)));
  CHECK(p.is_weighted_homogeneous({1, 1}, 2));
  CHECK_FALSE((p + one).is_weighted_homogeneous({1, 1}, 2));
  CHECK_THROWS_AS(Polynomial::variable(q, v, "z"), Error);
  auto r = p.mapped_to(Field::prime(3));
  CHECK(to_string(r) == "x^2 + 2*y^2");
}

TEST_CASE("univariate gcd and squarefree part") {
  Field q = Field::rationals();
  std::vector<std::string> v{"t"};
  auto t = Polynomial::variable(q, v, "t");
  auto c = [&](int k) { return Polynomial::constant(q, v, Rational(k)); };
  auto a = (t - c(1)).pow(2) * (t + c(2));
  auto b = (t - c(1)) * (t + c(3));
  CHECK(univariate_gcd(a, b, 0) == t - c(1));
  CHECK(squarefree_part(a, 0) == ((t - c(1)) * (t + c(2))));
  // Characteristic 5: t^5 - t^... p-th powers are stripped.
  Field f5 = Field::prime(5);
  auto u = Polynomial::variable(f5, v, "t");
  auto one = Polynomial::constant(f5, v, Rational(1));
  auto sq = squarefree_part((u.pow(5) - one) * u, 0);  // (t-1)^5 t
  CHECK(sq == (u - one) * u);
}

TEST_CASE("groebner basis of points") {
  Field q = Field::rationals();
  std::vector<std::string> v{"x", "y"};
  auto x = Polynomial::variable(q, v, "x"), y = Polynomial::variable(q, v, "y");
  auto c = [&](int k) { return Polynomial::constant(q, v, Rational(k)); };
  // Circle and line meet in two points.
  auto gb = groebner_basis({x * x + y * y - c(1), x - y});
  auto dim = quotient_dimension(gb);
  REQUIRE(dim);
  CHECK(*dim == 2);
  CHECK(ideal_contains(gb, y * y + y * y - c(1)));
  auto e = eliminant({x * x + y * y - c(1), x - y}, 1);
  REQUIRE(e);
  CHECK(to_string(*e) == "y^2 - 1/2");
  // Inconsistent system.
  auto empty = groebner_basis({x, x - c(1)});
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().is_constant());
  // A curve is not zero-dimensional.
  CHECK_FALSE(quotient_dimension(groebner_basis({x * y})));
}

TEST_CASE("groebner basis over F_p matches point count") {
  // Random systems x^2 = a, y^2 = b, xy = c over F_11; the oracle counts solutions directly.
  Field f = Field::prime(11);
  std::vector<std::string> v{"x", "y"};
  auto x = Polynomial::variable(f, v, "x"), y = Polynomial::variable(f, v, "y");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int a = static_cast<int>(rng() % 11), b = static_cast<int>(rng() % 11);
    auto c = [&](int k) { return Polynomial::constant(f, v, Rational(k)); };
    std::vector<Polynomial> gens{x * x - c(a), (x + y) * (x - c(b))};
    // Radical: adding squarefree eliminants.
    auto ex = eliminant(gens, 0), ey = eliminant(gens, 1);
    REQUIRE(ex);
    if (!ey) continue;  // a line of solutions (x = b, y free) when b^2 = a
    gens.push_back(squarefree_part(*ex, 0));
    gens.push_back(squarefree_part(*ey, 1));
    auto dim = quotient_dimension(groebner_basis(gens));
    REQUIRE(dim);
    // Oracle: the count over the algebraic closure equals the count over F_121 at most; use F_11
    // only when a is a square (then all solutions are rational).
    bool square = false;
    for (int r = 0; r < 11; ++r) square = square || (r * r) % 11 == a;
    if (!square) continue;
    std::size_t count = 0;
    for (int i = 0; i < 11; ++i)
      for (int j = 0; j < 11; ++j) {
        std::vector<FieldElem> pt{f.from(Rational(i)), f.from(Rational(j))};
        bool zero = true;
        for (std::size_t g = 0; g < 2; ++g) zero = zero && f.is_zero(gens[g].evaluate(pt));
        count += zero;
      }
    CHECK(*dim == count);
  }
}
