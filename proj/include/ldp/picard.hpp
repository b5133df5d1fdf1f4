#pragma once

#include "ldp/graphs.hpp"
#include "ldp/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldp {

/// A divisor class written over a named basis. Classes on different bases
/// never mix; use `extended_to` to pull a class back along a blowup.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(std::vector<std::string> basis, std::vector<Rational> coeffs);
  static DivisorClass zero(std::vector<std::string> basis);
  /// The basis element `name` with coefficient one.
  static DivisorClass unit(std::vector<std::string> basis, std::string_view name);

  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of a basis element. Throws UnknownName.
  const Rational& coeff(std::string_view name) const;
  bool is_integral() const;

  /// Same coefficients on a larger basis whose prefix is this basis: the
  /// total transform under the blowups that introduced the new names.
  DivisorClass extended_to(const std::vector<std::string>& basis) const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  bool operator==(const DivisorClass& o) const = default;

  friend DivisorClass operator*(const Rational& c, const DivisorClass& d);

 private:
  void same_basis(const DivisorClass& o) const;

  std::vector<std::string> basis_;
  std::vector<Rational> coeffs_;
};

/// "3H - e_a - 2g1 + 5/7G1"-style rendering over the basis names.
std::string to_string(const DivisorClass& d);

/// One connected component of the contracted locus: curve names in chain or
/// star order and the dual graph they are declared to form.
struct ContractedComponent {
  std::vector<std::string> curves;
  WeightedDualGraph graph;
};

/// Picard lattice of an iterated blowup of the projective plane: basis H
/// followed by the total transforms of the exceptional curves, with form
/// diag(1, -1, ..., -1). Construction checks every contracted component
/// against its declared graph.
class BlowupLattice {
 public:
  BlowupLattice(std::string name, std::vector<std::string> exceptional,
                std::vector<std::pair<std::string, DivisorClass>> named_curves,
                std::vector<ContractedComponent> contracted);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  DivisorClass canonical() const;
  /// A named curve, or a basis element when no curve has that name. Throws UnknownName.
  DivisorClass curve(std::string_view name) const;
  const std::vector<std::pair<std::string, DivisorClass>>& named_curves() const { return named_; }
  const std::vector<ContractedComponent>& contracted() const { return contracted_; }
  /// Contracted curve names, component by component.
  std::vector<std::string> contracted_curves() const;
  DynkinType dynkin() const;

  Rational dot(const DivisorClass& a, const DivisorClass& b) const;
  /// Gram matrix of the given classes.
  RatMatrix gram(const std::vector<DivisorClass>& classes) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::pair<std::string, DivisorClass>> named_;
  std::vector<ContractedComponent> contracted_;
};

/// Plane blown up at the four points a..d and once more on each E_x: basis
/// (H, e_a..e_d, f_a..f_d), with the two (-2)-chains forming 2[2^4].
BlowupLattice preset_2A4();

/// Minimal resolution of the surface with singularities 2[2^4]+dagger for
/// dagger "[3]" (one more blowup g1) or "[2,4]" (two blowups g1, g2).
/// Throws InvalidArgument for any other dagger.
BlowupLattice preset_resolution(std::string_view dagger);

/// Lookup by name: "2A4", "[3]" or "[2,4]". Throws UnknownName.
BlowupLattice preset(std::string_view name);

/// cls + sum c_i E_i over the contracted curves with (result . E_j) = 0 for
/// every contracted E_j. Throws NotNegativeDefinite.
DivisorClass pullback_weil(const BlowupLattice& lat, const DivisorClass& cls);
/// Same, contracting only the listed curves.
DivisorClass pullback_weil(const BlowupLattice& lat, const DivisorClass& cls,
                           const std::vector<std::string>& contracted_curves);

/// The Weil pullback kept in decomposed form: the input class plus explicit
/// coefficients along each contracted curve.
struct WeilPullback {
  DivisorClass base;
  std::vector<std::string> curves;
  std::vector<Rational> coefficients;
  DivisorClass total;
};

WeilPullback pullback_weil_decomposed(const BlowupLattice& lat, const DivisorClass& cls);

/// base + sum ceil(c_i) E_i. Throws NonIntegralClass if the base is not integral.
DivisorClass round_up(const BlowupLattice& lat, const WeilPullback& p);

/// (D_S . Y_S) computed as (pullback_weil(D) . Y).
Rational mumford_pairing(const BlowupLattice& lat, const DivisorClass& d, const DivisorClass& y);

/// Writes cls = Z + sum r_i C_i with Z integral and rounds every r_i up. The
/// result depends only on r modulo integers, so the support must be
/// independent and span a saturated sublattice. Throws AmbiguousSupport when
/// that fails or no such decomposition exists. The two (-2)-chains of the
/// presets span a sublattice of index 5, so classes supported on them need the
/// decomposed overload above.
DivisorClass round_up(const BlowupLattice& lat, const DivisorClass& cls, const std::vector<std::string>& support);

/// cls.(cls + K)/2 + 1
Rational arithmetic_genus(const BlowupLattice& lat, const DivisorClass& cls);

/// 1 + (cls^2 - cls.K)/2. Throws NonIntegralClass.
Rational chi_riemann_roch(const BlowupLattice& lat, const DivisorClass& cls);

/// The a with (K + aE).Sigma = 0. Throws RayOrthogonal when E.Sigma = 0.
Rational ray_trivial_coefficient(const BlowupLattice& lat, const DivisorClass& e, const DivisorClass& sigma);

/// Both sides of the anticanonical pullback identity for dagger "[3]" or "[2,4]":
///   pullback of -rK_S  ==  pullback of -mK_{S1}  -  c * (pullback of Sigma_1)
/// where S1 is the Du Val surface of preset_2A4 and Sigma_1 is the last
/// blowup curve, pulled back over the contracted curves other than C2.
struct PullbackIdentity {
  int r = 0;
  int m = 0;
  int c = 0;
  DivisorClass lhs;
  DivisorClass rhs;
  bool holds() const { return lhs == rhs; }
};

PullbackIdentity anticanonical_pullback_identity(std::string_view dagger);

/// The two Euler characteristics compared for a Weil divisor class
///   A = G2 + sum n_X X   on S,      A' = C2 + sum n_X X   on S1,
/// with X running over L_ac, L_bd, F_a..F_d (in that order) and sum n_X = 0.
struct ChiComparison {
  DivisorClass round_a;       // ceil(sigma^* A) on the "[2,4]" resolution
  DivisorClass round_aprime;  // ceil(tau^* A') on preset_2A4
  Rational chi_a;             // chi(-ceil(sigma^* A))
  Rational chi_aprime;        // chi(-ceil(tau^* A'))
};

/// Throws InvalidArgument unless n has six entries summing to zero.
ChiComparison chi_comparison(const std::vector<Integer>& n);

}  // namespace ldp
