#include "ldp/pencil.hpp"

#include "ldp/error.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ldp {

namespace {

const std::vector<std::string> kPlane{"X", "Y", "Z"};

void require_good_characteristic(const Field& f) {
  if (f.characteristic() == 2 || f.characteristic() == 3) {
    throw Error(ErrorKind::BadCharacteristic, "the pencil is degenerate in characteristic " + to_string(f.characteristic()));
  }
}

struct Ring {
  Field f;
  std::vector<std::string> vars;
  Polynomial v(std::string_view n) const { return Polynomial::variable(f, vars, n); }
  Polynomial c(const Rational& q) const { return Polynomial::constant(f, vars, q); }
  Polynomial c(const FieldElem& x) const { return Polynomial::constant(f, vars, x); }
};

// Same polynomial in a larger variable list (names must all be present).
Polynomial embed(const Polynomial& p, const std::vector<std::string>& vars) {
  std::vector<std::size_t> map;
  for (const auto& n : p.vars()) {
    auto it = std::find(vars.begin(), vars.end(), n);
    if (it == vars.end()) throw Error(ErrorKind::UnknownName, "variable " + n + " missing from target ring");
    map.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  return p.renamed(vars, map);
}

// Drops variables fixed to constants: substitutes values, then keeps `keep`.
Polynomial restrict_to(const Polynomial& p, const std::vector<std::pair<std::string, Rational>>& fixed,
                       const std::vector<std::string>& keep) {
  Polynomial q = p;
  for (const auto& [n, val] : fixed) q = q.substitute(q.var_index(n), q.field().from(val));
  std::vector<std::size_t> map;
  for (const auto& n : q.vars()) {
    auto it = std::find(keep.begin(), keep.end(), n);
    map.push_back(it == keep.end() ? keep.size() : static_cast<std::size_t>(it - keep.begin()));
  }
  // Remaining occurrences of dropped variables would be an error; they were substituted.
  Polynomial r(q.field(), keep);
  for (const auto& [e, c] : q.terms()) {
    Polynomial::Exponent g(keep.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == keep.size()) throw std::logic_error("variable left after restriction");
      g[map[i]] += e[i];
    }
    r.add_term(g, c);
  }
  return r;
}

// Univariate polynomial in the parameter whose roots are the parameter values
// with a singular member having a singular point in the given plane chart.
Polynomial chart_eliminant(const Field& f, const std::string& param, const std::string& other_param,
                           const std::vector<std::pair<std::string, Rational>>& plane_fixed) {
  std::vector<std::string> all{"s", "t", "X", "Y", "Z"};
  Ring r{f, all};
  Polynomial member = r.v("s") * embed(pencil_c0(f), all) + r.v("t") * embed(pencil_cinf(f), all);
  std::vector<std::string> keep;
  for (const auto& n : kPlane) {
    bool fixed = std::any_of(plane_fixed.begin(), plane_fixed.end(), [&](const auto& p) { return p.first == n; });
    if (!fixed) keep.push_back(n);
  }
  keep.push_back(param);
  auto fixed = plane_fixed;
  fixed.emplace_back(other_param, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& n : kPlane) gens.push_back(restrict_to(member.derivative(member.var_index(n)), fixed, keep));
  auto e = eliminant(gens, keep.size() - 1);
  if (!e) throw std::logic_error("singular members are not isolated");
  return *e;
}

// Parameter polynomial over all three charts of the plane, squarefree, in `param`.
Polynomial parameter_polynomial(const Field& f, const std::string& param, const std::string& other) {
  const std::vector<std::vector<std::pair<std::string, Rational>>> charts{
      {{"Z", Rational(1)}}, {{"Y", Rational(1)}}, {{"X", Rational(1)}}};
  Polynomial prod = Polynomial::constant(f, {param}, Rational(1));
  for (const auto& ch : charts) {
    Polynomial e = chart_eliminant(f, param, other, ch);
    std::vector<std::string> keep;
    for (const auto& n : kPlane)
      if (n != ch.front().first) keep.push_back(n);
    prod = prod * restrict_to(e, {{keep[0], Rational(0)}, {keep[1], Rational(0)}}, {param});
  }
  return squarefree_part(prod, 0);
}

}  // namespace

Polynomial pencil_c0(const Field& f) {
  Ring r{f, kPlane};
  auto X = r.v("X"), Y = r.v("Y"), Z = r.v("Z");
  return (Y * Y - Z * Z) * (X + Y);
}

Polynomial pencil_cinf(const Field& f) {
  Ring r{f, kPlane};
  auto X = r.v("X"), Y = r.v("Y"), Z = r.v("Z");
  return (X * X - Z * Z) * (Y - X);
}

Polynomial pencil_member(const Field& f, const FieldElem& s, const FieldElem& t) {
  return pencil_c0(f).scaled(s) + pencil_cinf(f).scaled(t);
}

Polynomial pencil_singular_locus(const Field& f) {
  require_good_characteristic(f);
  if (f.is_extension()) throw Error(ErrorKind::InvalidArgument, "the singular locus is computed over Q or F_p");
  // Chart s = 1 gives every parameter except [0:1]; chart t = 1 decides that one.
  Polynomial g = parameter_polynomial(f, "t", "s");
  Polynomial h = parameter_polynomial(f, "s", "t");
  bool at_infinity = f.is_zero(h.evaluate({f.zero()}));

  Ring r{f, {"s", "t"}};
  Polynomial out(f, {"s", "t"});
  const int d = g.degree(0);
  for (const auto& [e, c] : g.terms()) out.add_term({d - e[0], e[0]}, c);
  if (at_infinity) out = out * r.v("s");
  return out.monic();
}

bool quadratic_factor_double_root(const Field& f) {
  Ring r{f, {"t"}};
  auto t = r.v("t");
  Polynomial q = t * t + r.c(Rational(11)) * t - r.c(Rational(1));
  return !univariate_gcd(q, q.derivative(0), 0).is_constant();
}

std::string to_string(SingularKind k) { return k == SingularKind::Node ? "node" : "cusp"; }

SingularMemberReport classify_singular_member(const Field& f, const FieldElem& s, const FieldElem& t) {
  require_good_characteristic(f);
  if (f.is_zero(s) && f.is_zero(t)) throw Error(ErrorKind::InvalidArgument, "[0:0] is not a parameter");
  Polynomial m = pencil_member(f, s, t);
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < 3; ++i) partials.push_back(m.derivative(i));

  std::vector<std::vector<FieldElem>> points;
  std::size_t count = 0;

  // Z = 1.
  {
    std::vector<Polynomial> gens;
    for (const auto& p : partials) gens.push_back(restrict_to(p, {{"Z", Rational(1)}}, {"X", "Y"}));
    auto gb = groebner_basis(gens);
    if (!(gb.size() == 1 && gb.front().is_constant())) {
      auto ex = eliminant(gens, 0), ey = eliminant(gens, 1);
      if (!ex || !ey) throw Error(ErrorKind::MultipleSingularPoints, "the member has a curve of singular points");
      gens.push_back(squarefree_part(*ex, 0));
      gens.push_back(squarefree_part(*ey, 1));
      gb = groebner_basis(gens);
      auto dim = quotient_dimension(gb);
      if (!dim) throw std::logic_error("radical of a zero-dimensional ideal is not zero-dimensional");
      count += *dim;
      if (*dim == 1) {
        // Reduced lex basis of a single point: X - a, Y - b.
        FieldElem a = f.zero(), b = f.zero();
        for (const auto& g : gb) {
          FieldElem c = f.neg(g.coeff({0, 0}));
          if (g.leading_exponent() == Polynomial::Exponent{1, 0}) a = c;
          if (g.leading_exponent() == Polynomial::Exponent{0, 1}) b = c;
        }
        points.push_back({a, b, f.one()});
      }
    }
  }
  // Z = 0, Y = 1.
  {
    Polynomial g(f, {"X"});
    for (const auto& p : partials) {
      Polynomial q = restrict_to(p, {{"Z", Rational(0)}, {"Y", Rational(1)}}, {"X"});
      g = g.is_zero() ? q.monic() : univariate_gcd(g, q, 0);
    }
    if (!g.is_zero() && !g.is_constant()) {
      Polynomial sf = squarefree_part(g, 0);
      count += static_cast<std::size_t>(sf.degree(0));
      if (sf.degree(0) == 1) points.push_back({f.neg(sf.coeff({0})), f.one(), f.zero()});
    } else if (g.is_zero()) {
      throw Error(ErrorKind::MultipleSingularPoints, "the member is singular along Z = 0");
    }
  }
  // [1:0:0].
  {
    std::vector<FieldElem> p{f.one(), f.zero(), f.zero()};
    bool singular = std::all_of(partials.begin(), partials.end(), [&](const Polynomial& q) { return f.is_zero(q.evaluate(p)); });
    if (singular) {
      ++count;
      points.push_back(p);
    }
  }

  if (count == 0) throw Error(ErrorKind::NotSingularMember, "the member is smooth");
  if (count > 1) {
    throw Error(ErrorKind::MultipleSingularPoints, "the member has " + std::to_string(count) + " singular points");
  }

  SingularMemberReport rep;
  rep.s = s;
  rep.t = t;
  rep.point = points.front();
  // Local equation in the chart of the last nonzero coordinate, centered at the point.
  std::size_t chart = rep.point[2] != f.zero() ? 2 : (rep.point[1] != f.zero() ? 1 : 0);
  std::vector<std::string> local;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != chart) local.push_back(kPlane[i]), idx.push_back(i);
  Polynomial loc = restrict_to(m, {{kPlane[chart], Rational(1)}}, local);
  Ring lr{f, local};
  for (std::size_t k = 0; k < 2; ++k) {
    loc = loc.substitute(k, lr.v(local[k]) + lr.c(rep.point[idx[k]]));
  }
  if (!f.is_zero(loc.coeff({0, 0})) || !f.is_zero(loc.coeff({1, 0})) || !f.is_zero(loc.coeff({0, 1}))) {
    throw std::logic_error("singular point is not a critical point of the local equation");
  }
  FieldElem a = loc.coeff({2, 0}), b = loc.coeff({1, 1}), c = loc.coeff({0, 2});
  if (f.is_zero(a) && f.is_zero(b) && f.is_zero(c)) {
    throw Error(ErrorKind::UnsupportedConfiguration, "singular point of multiplicity three");
  }
  FieldElem disc = f.sub(f.mul(b, b), f.mul(f.from(Rational(4)), f.mul(a, c)));
  rep.kind = f.is_zero(disc) ? SingularKind::Cusp : SingularKind::Node;
  return rep;
}

// ----------------------------------------------------------------- cross-ratio

namespace {

// Integer coefficients with content one and positive leading coefficient.
Polynomial primitive_integer(const Polynomial& p) {
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) l = lcm(l, denominator(c.a));
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd(g, numerator(c.a * Rational(l)));
  Rational scale = Rational(l) / Rational(g);
  if (p.leading_coeff().a < 0) scale = -scale;
  return p.scaled(p.field().from(scale));
}

}  // namespace

std::vector<std::pair<FieldElem, FieldElem>> pencil_singular_parameters(const Field& k) {
  // theta' = -11 - theta
  return {{k.zero(), k.one()},
          {k.one(), k.zero()},
          {k.theta(), k.one()},
          {k.make(Rational(-11), Rational(-1)), k.one()}};
}

std::vector<Polynomial> cross_ratio_minimal_polynomials(const Field& k,
                                                        const std::vector<std::pair<FieldElem, FieldElem>>& points) {
  if (points.size() != 4) throw Error(ErrorKind::InvalidArgument, "cross-ratios need four points");
  if (k.characteristic() != 0 || !k.is_extension()) {
    throw Error(ErrorKind::InvalidArgument, "cross-ratio minimal polynomials are taken over a quadratic field");
  }
  auto bracket = [&](const auto& p, const auto& q) { return k.sub(k.mul(p.first, q.second), k.mul(p.second, q.first)); };
  Field q = k.base();
  std::set<std::string> seen;
  std::vector<Polynomial> out;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    const auto &p1 = points[perm[0]], &p2 = points[perm[1]], &p3 = points[perm[2]], &p4 = points[perm[3]];
    FieldElem num = k.mul(bracket(p4, p1), bracket(p2, p3));
    FieldElem den = k.mul(bracket(p4, p3), bracket(p2, p1));
    if (k.is_zero(den)) throw Error(ErrorKind::InvalidArgument, "the four points are not distinct");
    FieldElem alpha = k.div(num, den);
    if (alpha.b == 0) continue;
    Ring r{q, {"x"}};
    auto x = r.v("x");
    Polynomial mp = x * x - r.c(k.trace(alpha)) * x + r.c(k.norm(alpha));
    mp = primitive_integer(mp);
    if (seen.insert(to_string(mp)).second) out.push_back(mp);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return to_string(a) < to_string(b); });
  return out;
}

std::vector<Polynomial> cross_ratio_minimal_polynomials() {
  Field k = Field::rationals().quadratic(Rational(11), Rational(-1));
  return cross_ratio_minimal_polynomials(k, pencil_singular_parameters(k));
}

Integer quadratic_discriminant(const Polynomial& q) {
  if (q.vars().size() != 1 || q.degree(0) != 2 || q.field().characteristic() != 0 || q.field().is_extension()) {
    throw Error(ErrorKind::InvalidArgument, "expected a univariate quadratic over Q");
  }
  Rational a = q.coeff({2}).a, b = q.coeff({1}).a, c = q.coeff({0}).a;
  Rational d = b * b - 4 * a * c;
  if (!is_integral(d)) throw Error(ErrorKind::InvalidArgument, "expected integer coefficients");
  return numerator(d);
}

Integer squarefree_core(const Integer& n) {
  if (n == 0) throw Error(ErrorKind::ZeroInput, "zero has no squarefree core");
  Integer m = n < 0 ? Integer(-n) : n;
  Integer core = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) m /= p, ++e;
    if (e % 2) core *= p;
  }
  core *= m;
  return n < 0 ? Integer(-core) : core;
}

// -------------------------------------------------------------- weighted model

namespace {

const std::vector<std::string> kWeighted{"s", "t", "x", "y"};
const std::vector<int> kWeights{1, 1, 2, 3};

Ring weighted_ring() { return Ring{Field::prime(5), kWeighted}; }

}  // namespace

Polynomial weighted_model_f() {
  Ring r = weighted_ring();
  auto s = r.v("s"), t = r.v("t"), x = r.v("x"), y = r.v("y");
  return y * y - (x.pow(3) + r.c(Rational(2)) * t.pow(4) * x + r.c(Rational(4)) * s.pow(5) * t +
                  r.c(Rational(2)) * t.pow(6));
}

Polynomial weighted_model_d(int i) {
  Ring r = weighted_ring();
  auto s = r.v("s"), t = r.v("t"), x = r.v("x"), y = r.v("y");
  if (i == 2) return x - t * (s + r.c(Rational(2)) * t);
  if (i == 3) return y - t * (x + t * t + s * t + r.c(Rational(3)) * s * s);
  throw Error(ErrorKind::InvalidArgument, "only D2 and D3 are defined");
}

bool weighted_curve_smooth(const Polynomial& g) {
  if (g.vars().size() != 3) throw Error(ErrorKind::InvalidArgument, "expected a polynomial in (s, t, u)");
  const Field& f = g.field();
  auto empty = [](const std::vector<Polynomial>& gens) {
    auto gb = groebner_basis(gens);
    return gb.size() == 1 && gb.front().is_constant();
  };
  const auto& v = g.vars();
  // s = 1: coordinates (t, u).
  {
    std::vector<Polynomial> gens;
    for (const Polynomial& p : {g, g.derivative(1), g.derivative(2)}) gens.push_back(restrict_to(p, {{v[0], Rational(1)}}, {v[1], v[2]}));
    if (!empty(gens)) return false;
  }
  // t = 1: coordinates (s, u).
  {
    std::vector<Polynomial> gens;
    for (const Polynomial& p : {g, g.derivative(0), g.derivative(2)}) gens.push_back(restrict_to(p, {{v[1], Rational(1)}}, {v[0], v[2]}));
    if (!empty(gens)) return false;
  }
  return !f.is_zero(g.evaluate({f.zero(), f.zero(), f.one()}));
}

WeightedMemberReport weighted_member_check(int i) {
  Polynomial F = weighted_model_f();
  Polynomial D = weighted_model_d(i);
  Ring r = weighted_ring();
  const Field& f = r.f;
  WeightedMemberReport rep;
  rep.i = i;
  rep.degree_ok = D.is_weighted_homogeneous(kWeights, i) && F.is_weighted_homogeneous(kWeights, 6);

  // F = D = t = 0: t, x and y lie in the radical, and [1:0:0:0] is a zero.
  auto gb = groebner_basis({F, D, r.v("t")});
  bool radical_ok = ideal_contains(gb, r.v("t"));
  for (const char* n : {"x", "y"}) {
    bool found = false;
    for (unsigned k = 1; k <= 6 && !found; ++k) found = ideal_contains(gb, r.v(n).pow(k));
    radical_ok = radical_ok && found;
  }
  std::vector<FieldElem> cusp{f.one(), f.zero(), f.zero(), f.zero()};
  bool on = f.is_zero(F.evaluate(cusp)) && f.is_zero(D.evaluate(cusp));
  if (on) rep.support.push_back("[1:0:0:0]");
  rep.support_ok = radical_ok && on;

  // Eliminate the variable D_i is linear in, leaving a curve in P(1,1,w).
  std::size_t lin = i == 2 ? 2 : 3;
  Polynomial value = r.v(kWeighted[lin]) - D;  // D = var - value
  Polynomial g = F.substitute(lin, value);
  std::vector<std::string> keep{"s", "t", kWeighted[lin == 2 ? 3 : 2]};
  rep.smooth = weighted_curve_smooth(restrict_to(g, {}, keep));
  return rep;
}

}  // namespace ldp
