#include "ldp/picard.hpp"

#include "ldp/error.hpp"
#include "ldp/matrix.hpp"

#include <algorithm>

namespace ldp {

// ---------------------------------------------------------------- DivisorClass

DivisorClass::DivisorClass(std::vector<std::string> basis, std::vector<Rational> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (basis_.size() != coeffs_.size()) {
    throw Error(ErrorKind::IndexMismatch, "divisor class needs one coefficient per basis element");
  }
}

DivisorClass DivisorClass::zero(std::vector<std::string> basis) {
  std::vector<Rational> c(basis.size(), Rational(0));
  return DivisorClass(std::move(basis), std::move(c));
}

DivisorClass DivisorClass::unit(std::vector<std::string> basis, std::string_view name) {
  DivisorClass d = zero(std::move(basis));
  auto it = std::find(d.basis_.begin(), d.basis_.end(), name);
  if (it == d.basis_.end()) throw Error(ErrorKind::UnknownName, "unknown basis element " + std::string(name));
  d.coeffs_[it - d.basis_.begin()] = 1;
  return d;
}

const Rational& DivisorClass::coeff(std::string_view name) const {
  auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end()) throw Error(ErrorKind::UnknownName, "unknown basis element " + std::string(name));
  return coeffs_[it - basis_.begin()];
}

bool DivisorClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return ldp::is_integral(q); });
}

DivisorClass DivisorClass::extended_to(const std::vector<std::string>& basis) const {
  if (basis.size() < basis_.size() || !std::equal(basis_.begin(), basis_.end(), basis.begin())) {
    throw Error(ErrorKind::InvalidArgument, "target basis does not extend the class basis");
  }
  std::vector<Rational> c = coeffs_;
  c.resize(basis.size(), Rational(0));
  return DivisorClass(basis, std::move(c));
}

void DivisorClass::same_basis(const DivisorClass& o) const {
  if (basis_ != o.basis_) throw Error(ErrorKind::InvalidArgument, "divisor classes live on different bases");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  DivisorClass r = *this;
  r += o;
  return r;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  same_basis(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) { return *this += -o; }

DivisorClass DivisorClass::operator-() const { return Rational(-1) * *this; }

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass operator*(const Rational& c, const DivisorClass& d) {
  DivisorClass r = d;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::string to_string(const DivisorClass& d) {
  std::string out;
  for (std::size_t i = 0; i < d.basis().size(); ++i) {
    const Rational& c = d.coeffs()[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag);
    out += d.basis()[i];
  }
  return out.empty() ? "0" : out;
}

// --------------------------------------------------------------- BlowupLattice

BlowupLattice::BlowupLattice(std::string name, std::vector<std::string> exceptional,
                             std::vector<std::pair<std::string, DivisorClass>> named_curves,
                             std::vector<ContractedComponent> contracted)
    : name_(std::move(name)), named_(std::move(named_curves)), contracted_(std::move(contracted)) {
  basis_.push_back("H");
  for (auto& e : exceptional) basis_.push_back(std::move(e));
  for (const auto& [n, c] : named_) {
    if (c.basis() != basis_) throw Error(ErrorKind::InvalidArgument, "curve " + n + " is on a different basis");
  }
  for (const auto& comp : contracted_) {
    if (comp.curves.size() != comp.graph.size()) {
      throw Error(ErrorKind::IndexMismatch, "contracted component size differs from its graph");
    }
    std::vector<DivisorClass> classes;
    for (const auto& n : comp.curves) classes.push_back(curve(n));
    RatMatrix g = gram(classes);
    if (g != to_rational(intersection_matrix(comp.graph))) {
      throw Error(ErrorKind::InvalidArgument, "contracted curves do not form the declared graph " +
                                                  format_graph(comp.graph));
    }
  }
  // Distinct components must not meet.
  auto all = contracted_curves();
  std::vector<DivisorClass> classes;
  for (const auto& n : all) classes.push_back(curve(n));
  RatMatrix g = gram(classes);
  std::size_t off = 0;
  for (std::size_t k = 0; k < contracted_.size(); ++k) {
    std::size_t end = off + contracted_[k].curves.size();
    for (std::size_t i = off; i < end; ++i)
      for (std::size_t j = end; j < all.size(); ++j)
        if (g(i, j) != 0) throw Error(ErrorKind::InvalidArgument, "contracted components " + all[i] + " and " + all[j] + " meet");
    off = end;
  }
}

DivisorClass BlowupLattice::canonical() const {
  std::vector<Rational> c(basis_.size(), Rational(1));
  c[0] = -3;
  return DivisorClass(basis_, std::move(c));
}

DivisorClass BlowupLattice::curve(std::string_view name) const {
  for (const auto& [n, c] : named_)
    if (n == name) return c;
  return DivisorClass::unit(basis_, name);
}

std::vector<std::string> BlowupLattice::contracted_curves() const {
  std::vector<std::string> out;
  for (const auto& comp : contracted_) out.insert(out.end(), comp.curves.begin(), comp.curves.end());
  return out;
}

DynkinType BlowupLattice::dynkin() const {
  std::vector<WeightedDualGraph> g;
  for (const auto& comp : contracted_) g.push_back(comp.graph);
  return DynkinType(std::move(g));
}

Rational BlowupLattice::dot(const DivisorClass& a, const DivisorClass& b) const {
  if (a.basis() != basis_ || b.basis() != basis_) {
    throw Error(ErrorKind::InvalidArgument, "divisor class is not on the basis of lattice " + name_);
  }
  Rational s = a.coeffs()[0] * b.coeffs()[0];
  for (std::size_t i = 1; i < basis_.size(); ++i) s -= a.coeffs()[i] * b.coeffs()[i];
  return s;
}

RatMatrix BlowupLattice::gram(const std::vector<DivisorClass>& classes) const {
  RatMatrix m(classes.size(), classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i; j < classes.size(); ++j) m(i, j) = m(j, i) = dot(classes[i], classes[j]);
  return m;
}

// --------------------------------------------------------------------- presets

namespace {

const char* const kPoints[] = {"a", "b", "c", "d"};

std::vector<std::string> base_exceptional() {
  std::vector<std::string> e;
  for (const char* x : kPoints) e.push_back(std::string("e_") + x);
  for (const char* x : kPoints) e.push_back(std::string("f_") + x);
  return e;
}

std::vector<std::string> full_basis(const std::vector<std::string>& exceptional) {
  std::vector<std::string> b{"H"};
  b.insert(b.end(), exceptional.begin(), exceptional.end());
  return b;
}

// Class from sparse integer coefficients.
DivisorClass cls(const std::vector<std::string>& basis, std::initializer_list<std::pair<const char*, int>> terms) {
  DivisorClass d = DivisorClass::zero(basis);
  for (auto [n, c] : terms) d += Rational(c) * DivisorClass::unit(basis, n);
  return d;
}

std::vector<std::pair<std::string, DivisorClass>> base_curves(const std::vector<std::string>& b) {
  std::vector<std::pair<std::string, DivisorClass>> c;
  c.emplace_back("L_ab", cls(b, {{"H", 1}, {"e_a", -1}, {"e_b", -1}, {"f_a", -1}}));
  c.emplace_back("L_bc", cls(b, {{"H", 1}, {"e_b", -1}, {"e_c", -1}, {"f_b", -1}}));
  c.emplace_back("L_cd", cls(b, {{"H", 1}, {"e_c", -1}, {"e_d", -1}, {"f_c", -1}}));
  c.emplace_back("L_ad", cls(b, {{"H", 1}, {"e_a", -1}, {"e_d", -1}, {"f_d", -1}}));
  c.emplace_back("L_ac", cls(b, {{"H", 1}, {"e_a", -1}, {"e_c", -1}}));
  c.emplace_back("L_bd", cls(b, {{"H", 1}, {"e_b", -1}, {"e_d", -1}}));
  for (const char* x : kPoints) {
    std::string e = std::string("e_") + x, f = std::string("f_") + x;
    c.emplace_back(std::string("E_") + x, cls(b, {{e.c_str(), 1}, {f.c_str(), -1}}));
  }
  for (const char* x : kPoints) {
    std::string f = std::string("f_") + x;
    c.emplace_back(std::string("F_") + x, cls(b, {{f.c_str(), 1}}));
  }
  return c;
}

// 3H - sum e - sum f minus the extra terms.
DivisorClass cubic(const std::vector<std::string>& b, std::initializer_list<std::pair<const char*, int>> extra) {
  DivisorClass d = cls(b, {{"H", 3}});
  for (std::size_t i = 1; i <= 8; ++i) d -= DivisorClass::unit(b, b[i]);
  return d + cls(b, extra);
}

std::vector<ContractedComponent> base_contracted() {
  auto a4 = WeightedDualGraph::chain({2, 2, 2, 2});
  return {{{"E_a", "L_ad", "L_bc", "E_c"}, a4}, {{"E_d", "L_cd", "L_ab", "E_b"}, a4}};
}

}  // namespace

BlowupLattice preset_2A4() {
  auto ex = base_exceptional();
  auto b = full_basis(ex);
  auto curves = base_curves(b);
  curves.emplace_back("C2", cubic(b, {}));
  return BlowupLattice("2A4", ex, std::move(curves), base_contracted());
}

BlowupLattice preset_resolution(std::string_view dagger) {
  auto ex = base_exceptional();
  auto contracted = base_contracted();
  std::vector<std::pair<std::string, DivisorClass>> curves;
  if (dagger == "[3]") {
    ex.push_back("g1");
    auto b = full_basis(ex);
    curves = base_curves(b);
    curves.emplace_back("C2", cubic(b, {{"g1", -2}}));
    contracted.push_back({{"C2"}, WeightedDualGraph::chain({3})});
    return BlowupLattice("[3]", ex, std::move(curves), std::move(contracted));
  }
  if (dagger == "[2,4]") {
    ex.push_back("g1");
    ex.push_back("g2");
    auto b = full_basis(ex);
    curves = base_curves(b);
    curves.emplace_back("C2", cubic(b, {{"g1", -2}, {"g2", -1}}));
    curves.emplace_back("G1", cls(b, {{"g1", 1}, {"g2", -1}}));
    curves.emplace_back("G2", cls(b, {{"g2", 1}}));
    contracted.push_back({{"G1", "C2"}, WeightedDualGraph::chain({2, 4})});
    return BlowupLattice("[2,4]", ex, std::move(curves), std::move(contracted));
  }
  throw Error(ErrorKind::InvalidArgument, "no resolution preset for " + std::string(dagger));
}

BlowupLattice preset(std::string_view name) {
  if (name == "2A4") return preset_2A4();
  if (name == "[3]" || name == "[2,4]") return preset_resolution(name);
  throw Error(ErrorKind::UnknownName, "unknown preset " + std::string(name));
}

// ------------------------------------------------------------------ operations

DivisorClass pullback_weil(const BlowupLattice& lat, const DivisorClass& cls) {
  return pullback_weil(lat, cls, lat.contracted_curves());
}

DivisorClass pullback_weil(const BlowupLattice& lat, const DivisorClass& cls,
                           const std::vector<std::string>& contracted_curves) {
  if (contracted_curves.empty()) return cls;
  std::vector<DivisorClass> e;
  for (const auto& n : contracted_curves) e.push_back(lat.curve(n));
  RatMatrix m = lat.gram(e);
  IntMatrix mi(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mi(i, j) = numerator(m(i, j));
  if (!is_negative_definite(mi)) {
    throw Error(ErrorKind::NotNegativeDefinite, "contracted curves are not negative definite");
  }
  std::vector<Rational> rhs;
  for (const auto& x : e) rhs.push_back(-lat.dot(cls, x));
  auto c = solve(m, rhs);
  DivisorClass out = cls;
  for (std::size_t i = 0; i < e.size(); ++i) out += c[i] * e[i];
  for (const auto& x : e) {
    if (lat.dot(out, x) != 0) throw std::logic_error("pullback is not orthogonal to a contracted curve");
  }
  return out;
}

WeilPullback pullback_weil_decomposed(const BlowupLattice& lat, const DivisorClass& cls) {
  WeilPullback p;
  p.base = cls;
  p.curves = lat.contracted_curves();
  p.total = pullback_weil(lat, cls);
  // The contracted classes are independent, so the coefficients are read off
  // by solving against their Gram matrix.
  std::vector<DivisorClass> e;
  for (const auto& n : p.curves) e.push_back(lat.curve(n));
  std::vector<Rational> rhs;
  DivisorClass diff = p.total - cls;
  for (const auto& x : e) rhs.push_back(lat.dot(diff, x));
  p.coefficients = solve(lat.gram(e), rhs);
  return p;
}

DivisorClass round_up(const BlowupLattice& lat, const WeilPullback& p) {
  if (!p.base.is_integral()) throw Error(ErrorKind::NonIntegralClass, "pullback base is not integral");
  DivisorClass out = p.base;
  for (std::size_t i = 0; i < p.curves.size(); ++i) out += Rational(ceil(p.coefficients[i])) * lat.curve(p.curves[i]);
  return out;
}

Rational mumford_pairing(const BlowupLattice& lat, const DivisorClass& d, const DivisorClass& y) {
  return lat.dot(pullback_weil(lat, d), y);
}

DivisorClass round_up(const BlowupLattice& lat, const DivisorClass& cls, const std::vector<std::string>& support) {
  const std::size_t k = support.size();
  const std::size_t n = lat.basis().size();
  if (cls.basis() != lat.basis()) throw Error(ErrorKind::InvalidArgument, "class is not on the lattice basis");
  if (k == 0) {
    if (!cls.is_integral()) throw Error(ErrorKind::AmbiguousSupport, "non-integral class with empty support");
    return cls;
  }
  std::vector<DivisorClass> curves;
  IntMatrix c(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    curves.push_back(lat.curve(support[i]));
    if (!curves.back().is_integral()) throw Error(ErrorKind::AmbiguousSupport, "support curve " + support[i] + " is not integral");
    for (std::size_t j = 0; j < n; ++j) c(i, j) = numerator(curves.back().coeffs()[j]);
  }
  // u c v = d. We need r with r^T c = x (mod Z^n); with s^T = r^T u^{-1} this
  // reads s_i d_i = (x v)_i (mod Z) on the diagonal and (x v)_i integral beyond.
  SmithForm snf = smith_normal_form(c);
  if (snf.rank != k) throw Error(ErrorKind::AmbiguousSupport, "support curves are linearly dependent");
  for (std::size_t i = 0; i < k; ++i) {
    if (abs(snf.d(i, i)) != 1) {
      throw Error(ErrorKind::AmbiguousSupport, "support curves do not span a saturated sublattice");
    }
  }
  std::vector<Rational> xv(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) xv[j] += cls.coeffs()[i] * Rational(snf.v(i, j));
  for (std::size_t j = k; j < n; ++j) {
    if (!is_integral(xv[j])) {
      throw Error(ErrorKind::AmbiguousSupport, "class is not integral plus a combination of the support");
    }
  }
  DivisorClass out = cls;
  for (std::size_t i = 0; i < k; ++i) {
    Rational r = 0;
    for (std::size_t t = 0; t < k; ++t) r += xv[t] * Rational(snf.d(t, t)) * Rational(snf.u(t, i));
    out += (Rational(ceil(r)) - r) * curves[i];
  }
  if (!out.is_integral()) throw std::logic_error("round_up produced a non-integral class");
  return out;
}

Rational arithmetic_genus(const BlowupLattice& lat, const DivisorClass& cls) {
  return lat.dot(cls, cls + lat.canonical()) / 2 + 1;
}

Rational chi_riemann_roch(const BlowupLattice& lat, const DivisorClass& cls) {
  if (!cls.is_integral()) throw Error(ErrorKind::NonIntegralClass, "Riemann-Roch needs an integral class");
  return 1 + (lat.dot(cls, cls) - lat.dot(cls, lat.canonical())) / 2;
}

Rational ray_trivial_coefficient(const BlowupLattice& lat, const DivisorClass& e, const DivisorClass& sigma) {
  Rational es = lat.dot(e, sigma);
  if (es == 0) throw Error(ErrorKind::RayOrthogonal, "E is orthogonal to Sigma");
  return -lat.dot(lat.canonical(), sigma) / es;
}

PullbackIdentity anticanonical_pullback_identity(std::string_view dagger) {
  BlowupLattice res = preset_resolution(dagger);
  BlowupLattice base = preset_2A4();
  PullbackIdentity id;
  std::string sigma1;
  if (dagger == "[3]") {
    id.r = 3, id.m = 2, id.c = 1;
    sigma1 = "g1";
  } else {
    id.r = 7, id.m = 3, id.c = 2;
    sigma1 = "G2";
  }
  id.lhs = pullback_weil(res, Rational(-id.r) * res.canonical());
  DivisorClass down = pullback_weil(base, Rational(-id.m) * base.canonical()).extended_to(res.basis());
  std::vector<std::string> keep_c2;
  for (const auto& n : res.contracted_curves())
    if (n != "C2") keep_c2.push_back(n);
  id.rhs = down - Rational(id.c) * pullback_weil(res, res.curve(sigma1), keep_c2);
  return id;
}

ChiComparison chi_comparison(const std::vector<Integer>& n) {
  static const char* const kCurves[] = {"L_ac", "L_bd", "F_a", "F_b", "F_c", "F_d"};
  if (n.size() != 6) throw Error(ErrorKind::InvalidArgument, "expected six coefficients");
  Integer sum = 0;
  for (const auto& x : n) sum += x;
  if (sum != 0) throw Error(ErrorKind::InvalidArgument, "coefficients must sum to zero");

  BlowupLattice res = preset_resolution("[2,4]");
  BlowupLattice base = preset_2A4();
  DivisorClass a = res.curve("G2");
  DivisorClass ap = base.curve("C2");
  for (std::size_t i = 0; i < 6; ++i) {
    a += Rational(n[i]) * res.curve(kCurves[i]);
    ap += Rational(n[i]) * base.curve(kCurves[i]);
  }
  ChiComparison out;
  out.round_a = round_up(res, pullback_weil_decomposed(res, a));
  out.round_aprime = round_up(base, pullback_weil_decomposed(base, ap));
  out.chi_a = chi_riemann_roch(res, -out.round_a);
  out.chi_aprime = chi_riemann_roch(base, -out.round_aprime);
  return out;
}

}  // namespace ldp
