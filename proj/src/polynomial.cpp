#include "ldp/polynomial.hpp"

#include "ldp/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <utility>

namespace ldp {

Polynomial::Polynomial(Field f, std::vector<std::string> vars) : field_(std::move(f)), vars_(std::move(vars)) {}

Polynomial Polynomial::constant(const Field& f, const std::vector<std::string>& vars, const FieldElem& c) {
  Polynomial p(f, vars);
  p.add_term(Exponent(vars.size(), 0), c);
  return p;
}

Polynomial Polynomial::constant(const Field& f, const std::vector<std::string>& vars, const Rational& c) {
  return constant(f, vars, f.from(c));
}

Polynomial Polynomial::variable(const Field& f, const std::vector<std::string>& vars, std::string_view name) {
  Polynomial p(f, vars);
  Exponent e(vars.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, f.one());
  return p;
}

std::size_t Polynomial::var_index(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw Error(ErrorKind::UnknownName, "unknown variable " + std::string(name));
  return static_cast<std::size_t>(it - vars_.begin());
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                              [](int x) { return x == 0; }));
}

FieldElem Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Exponent& e, const FieldElem& c) {
  if (e.size() != vars_.size()) throw Error(ErrorKind::IndexMismatch, "exponent length differs from variable count");
  if (field_.is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }
}

const Polynomial::Exponent& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const FieldElem& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

int Polynomial::degree(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::total_degree() const { return weighted_degree(std::vector<int>(vars_.size(), 1)); }

int Polynomial::weighted_degree(const std::vector<int>& weights) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weights.at(i) * e[i];
    d = std::max(d, w);
  }
  return d;
}

bool Polynomial::is_weighted_homogeneous(const std::vector<int>& weights, int d) const {
  if (weights.size() != vars_.size()) throw Error(ErrorKind::IndexMismatch, "one weight per variable expected");
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
    if (w != d) return false;
  }
  return true;
}

bool Polynomial::is_univariate_in(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) return false;
  return true;
}

void Polynomial::check(const Polynomial& o) const {
  if (!(field_ == o.field_) || vars_ != o.vars_) {
    throw Error(ErrorKind::InvalidArgument, "polynomials over different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  Polynomial r(field_, vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, field_.mul(c1, c2));
    }
  return r;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  Polynomial r(field_, vars_);
  if (field_.is_zero(c)) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, field_.mul(x, c));
  return r;
}

Polynomial Polynomial::shifted(const Exponent& m, const FieldElem& c) const {
  Polynomial r(field_, vars_);
  if (field_.is_zero(c)) return r;
  for (const auto& [e, x] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
    r.terms_.emplace(std::move(f), field_.mul(x, c));
  }
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(field_, vars_, field_.one());
  Polynomial b = *this;
  while (n) {
    if (n & 1u) r = r * b;
    b = b * b;
    n >>= 1u;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading_coeff()));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, field_.mul(c, field_.from(Rational(e[var]))));
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& q) const {
  check(q);
  Polynomial r(field_, vars_);
  std::map<int, Polynomial> powers;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    int k = f[var];
    f[var] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, q.pow(static_cast<unsigned>(k))).first;
    r = r + it->second.shifted(f, c);
  }
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const FieldElem& value) const {
  return substitute(var, constant(field_, vars_, value));
}

FieldElem Polynomial::evaluate(const std::vector<FieldElem>& point) const {
  if (point.size() != vars_.size()) throw Error(ErrorKind::IndexMismatch, "point dimension differs from variable count");
  FieldElem s = field_.zero();
  for (const auto& [e, c] : terms_) {
    FieldElem m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m = field_.mul(m, field_.pow(point[i], static_cast<unsigned>(e[i])));
    s = field_.add(s, m);
  }
  return s;
}

Polynomial Polynomial::mapped_to(const Field& target) const {
  Polynomial r(target, vars_);
  for (const auto& [e, c] : terms_) {
    if (field_.is_extension() && !target.is_extension()) {
      throw Error(ErrorKind::InvalidArgument, "cannot map an extension element to its base");
    }
    if (field_.is_extension() && !(field_ == target)) {
      throw Error(ErrorKind::InvalidArgument, "incompatible extension fields");
    }
    r.add_term(e, target.make(c.a, c.b));
  }
  return r;
}

Polynomial Polynomial::renamed(const std::vector<std::string>& vars, const std::vector<std::size_t>& map) const {
  if (map.size() != vars_.size()) throw Error(ErrorKind::IndexMismatch, "variable map has the wrong length");
  Polynomial r(field_, vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] >= vars.size()) throw Error(ErrorKind::IndexMismatch, "variable map target out of range");
      f[map[i]] += e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Field& f = p.field();
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    // Over Q with a rational coefficient the sign is pulled out front.
    bool negative = f.characteristic() == 0 && c.b == 0 && c.a < 0;
    FieldElem mag = negative ? f.neg(c) : c;
    std::string coef = f.format(mag);
    if (c.b != 0) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (mag == f.one()) {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ------------------------------------------------------------------ Groebner

namespace {

bool divides(const Polynomial::Exponent& a, const Polynomial::Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Polynomial::Exponent lcm_exp(const Polynomial::Exponent& a, const Polynomial::Exponent& b) {
  Polynomial::Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Polynomial::Exponent diff_exp(const Polynomial::Exponent& a, const Polynomial::Exponent& b) {
  Polynomial::Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Polynomial::Exponent& a, const Polynomial::Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Field& k = f.field();
  auto l = lcm_exp(f.leading_exponent(), g.leading_exponent());
  Polynomial a = f.shifted(diff_exp(l, f.leading_exponent()), k.inv(f.leading_coeff()));
  Polynomial b = g.shifted(diff_exp(l, g.leading_exponent()), k.inv(g.leading_coeff()));
  return a - b;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  const Field& k = p.field();
  Polynomial rest = p;
  Polynomial rem(k, p.vars());
  while (!rest.is_zero()) {
    const auto lt = rest.leading_exponent();
    const auto lc = rest.leading_coeff();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !divides(g.leading_exponent(), lt)) continue;
      FieldElem factor = k.div(lc, g.leading_coeff());
      rest = rest - g.shifted(diff_exp(lt, g.leading_exponent()), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lt, lc);
      Polynomial head(k, p.vars());
      head.add_term(lt, lc);
      rest = rest - head;
    }
  }
  return rem;
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> g;
  for (const auto& p : generators)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(g[i].leading_exponent(), g[j].leading_exponent())) continue;
    Polynomial r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    if (g.back().is_constant()) return {g.back()};
    for (std::size_t a = 0; a + 1 < g.size(); ++a) pairs.emplace_back(a, g.size() - 1);
  }
  // Minimize: drop elements whose leading term is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_exponent(), g[i].leading_exponent())) continue;
      // Equal leading terms: keep the earlier one.
      redundant = g[j].leading_exponent() != g[i].leading_exponent() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial head(minimal[i].field(), minimal[i].vars());
    head.add_term(minimal[i].leading_exponent(), minimal[i].leading_coeff());
    minimal[i] = (head + normal_form(minimal[i] - head, others)).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_exponent() < b.leading_exponent(); });
  return minimal;
}

bool ideal_contains(const std::vector<Polynomial>& basis, const Polynomial& p) {
  return normal_form(p, basis).is_zero();
}

Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (!a.is_univariate_in(var) || !b.is_univariate_in(var)) {
    throw Error(ErrorKind::InvalidArgument, "univariate_gcd needs univariate inputs");
  }
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = normal_form(x, {y});
    x = y;
    y = r;
  }
  return x.monic();
}

namespace {

// p-th root of a univariate polynomial over a prime field whose exponents are
// all divisible by p (coefficients are fixed by Frobenius there).
Polynomial pth_root(const Polynomial& f, std::size_t var, int p) {
  Polynomial r(f.field(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    Polynomial::Exponent g = e;
    g[var] /= p;
    r.add_term(g, c);
  }
  return r;
}

}  // namespace

Polynomial squarefree_part(const Polynomial& f, std::size_t var) {
  if (!f.is_univariate_in(var)) throw Error(ErrorKind::InvalidArgument, "squarefree_part needs a univariate input");
  if (f.is_constant()) return f.is_zero() ? f : Polynomial::constant(f.field(), f.vars(), f.field().one());
  const Field& k = f.field();
  Polynomial d = f.derivative(var);
  if (d.is_zero()) {
    // Only possible in characteristic p: f = g(x^p) = h(x)^p over a prime field.
    if (k.is_extension()) throw Error(ErrorKind::InvalidArgument, "inseparable input over an extension field");
    int p = static_cast<int>(k.characteristic());
    return squarefree_part(pth_root(f, var, p), var);
  }
  Polynomial g = univariate_gcd(f, d, var);
  // f / g by exact division.
  Polynomial q(k, f.vars());
  Polynomial rest = f;
  while (!rest.is_zero()) {
    auto e = diff_exp(rest.leading_exponent(), g.leading_exponent());
    FieldElem c = k.div(rest.leading_coeff(), g.leading_coeff());
    q.add_term(e, c);
    rest = rest - g.shifted(e, c);
  }
  // Factors of multiplicity divisible by p survive in g but vanish from f/g; add them back.
  if (k.characteristic() != 0 && !g.is_constant()) {
    Polynomial extra = squarefree_part(g, var);
    Polynomial common = univariate_gcd(q, extra, var);
    // extra / common
    Polynomial add(k, f.vars());
    Polynomial r2 = extra;
    while (!r2.is_zero()) {
      auto e = diff_exp(r2.leading_exponent(), common.leading_exponent());
      FieldElem c = k.div(r2.leading_coeff(), common.leading_coeff());
      add.add_term(e, c);
      r2 = r2 - common.shifted(e, c);
    }
    q = q * add;
  }
  return q.monic();
}

std::optional<std::size_t> quotient_dimension(const std::vector<Polynomial>& basis) {
  if (basis.empty()) return std::nullopt;
  const std::size_t n = basis.front().vars().size();
  if (basis.size() == 1 && basis.front().is_constant()) return 0;
  // Each variable needs a pure power among the leading terms.
  std::vector<int> bound(n, -1);
  for (const auto& g : basis) {
    const auto& e = g.leading_exponent();
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) ++nz, idx = i;
    if (nz == 1 && (bound[idx] < 0 || e[idx] < bound[idx])) bound[idx] = e[idx];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;
  std::size_t count = 0;
  Polynomial::Exponent m(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      for (const auto& g : basis)
        if (divides(g.leading_exponent(), m)) return;
      ++count;
      return;
    }
    for (int k = 0; k < bound[i]; ++k) {
      m[i] = k;
      walk(i + 1);
    }
    m[i] = 0;
  };
  walk(0);
  return count;
}

std::optional<Polynomial> eliminant(const std::vector<Polynomial>& generators, std::size_t var) {
  if (generators.empty()) return std::nullopt;
  const auto& vars = generators.front().vars();
  const std::size_t n = vars.size();
  // Move `var` to the end so lex eliminates every other variable first.
  std::vector<std::string> order;
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0, k = 0; i < n; ++i)
    if (i != var) order.push_back(vars[i]), map[i] = k++;
  order.push_back(vars[var]);
  map[var] = n - 1;
  std::vector<Polynomial> moved;
  for (const auto& g : generators) moved.push_back(g.renamed(order, map));
  auto gb = groebner_basis(moved);
  for (const auto& g : gb) {
    if (g.is_univariate_in(n - 1)) {
      std::vector<std::size_t> back(n);
      for (std::size_t i = 0; i < n; ++i) back[map[i]] = i;
      return g.renamed(vars, back).monic();
    }
  }
  return std::nullopt;
}

}  // namespace ldp
