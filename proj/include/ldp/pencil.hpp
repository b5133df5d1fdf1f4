#pragma once

#include "ldp/field.hpp"
#include "ldp/polynomial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ldp {

/// C0 = (Y^2 - Z^2)(X + Y) and Cinf = (X^2 - Z^2)(Y - X) in variables (X, Y, Z).
Polynomial pencil_c0(const Field& f);
Polynomial pencil_cinf(const Field& f);
/// s*C0 + t*Cinf.
Polynomial pencil_member(const Field& f, const FieldElem& s, const FieldElem& t);

/// Reduced binary form in (s, t) vanishing exactly at the parameters [s:t]
/// whose member is singular. Computed by lex elimination on each affine chart
/// of the plane and of the parameter line, then made squarefree and monic for
/// lex order s > t. Throws BadCharacteristic for characteristic 2 or 3 and
/// InvalidArgument for extension fields.
Polynomial pencil_singular_locus(const Field& f);

/// Whether t^2 + 11t - 1 has a repeated root over f, decided by gcd(q, q').
bool quadratic_factor_double_root(const Field& f);

enum class SingularKind { Node, Cusp };

std::string to_string(SingularKind k);

struct SingularMemberReport {
  FieldElem s;
  FieldElem t;
  /// Singular point, normalized so the last nonzero coordinate is one.
  std::vector<FieldElem> point;
  SingularKind kind = SingularKind::Node;
};

/// Finds the singular point of the member [s:t] over f and classifies it by
/// the rank of the quadratic part of the local equation. Throws
/// BadCharacteristic (2 or 3), NotSingularMember, or MultipleSingularPoints.
SingularMemberReport classify_singular_member(const Field& f, const FieldElem& s, const FieldElem& t);

/// Minimal polynomials over Q (integer, content one, positive leading
/// coefficient) of the non-rational cross-ratios of the four points, taken
/// over every ordering. Points are (numerator, denominator) pairs over a
/// quadratic extension of Q; (1, 0) is infinity. Sorted by their rendering.
std::vector<Polynomial> cross_ratio_minimal_polynomials(const Field& k,
                                                        const std::vector<std::pair<FieldElem, FieldElem>>& points);

/// The four roots 0, infinity, theta, theta' of s*t*(t^2 + 11st - s^2) in
/// Q[theta]/(theta^2 + 11 theta - 1).
std::vector<std::pair<FieldElem, FieldElem>> pencil_singular_parameters(const Field& k);

/// cross_ratio_minimal_polynomials on pencil_singular_parameters.
std::vector<Polynomial> cross_ratio_minimal_polynomials();

/// b^2 - 4ac of a univariate quadratic over Q with integer coefficients.
Integer quadratic_discriminant(const Polynomial& q);

/// The squarefree d with n = d m^2 (sign kept). Throws ZeroInput.
Integer squarefree_core(const Integer& n);

/// Checks on the weighted model over F_5 in P(1,1,2,3) with coordinates (s, t, x, y):
///   F  = y^2 - (x^3 + 2t^4 x + 4s^5 t + 2t^6)
///   D2 = x - t(s + 2t),  D3 = y - t(x + t^2 + st + 3s^2).
struct WeightedMemberReport {
  int i = 0;
  /// D_i is weighted homogeneous of degree i and F of degree 6.
  bool degree_ok = false;
  /// F = D_i = t = 0 is supported exactly at [1:0:0:0].
  bool support_ok = false;
  std::vector<std::string> support;
  /// F = D_i = 0 is a smooth curve.
  bool smooth = false;
};

Polynomial weighted_model_f();
/// Throws InvalidArgument unless i is 2 or 3.
Polynomial weighted_model_d(int i);
WeightedMemberReport weighted_member_check(int i);

/// Smoothness of {G = 0} in P(1,1,w) with coordinates (s, t, u): no common zero
/// of G and its partials on either chart s = 1, t = 1, and G(0,0,1) != 0.
bool weighted_curve_smooth(const Polynomial& g);

}  // namespace ldp
