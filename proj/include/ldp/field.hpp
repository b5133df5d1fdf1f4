#pragma once

#include "ldp/rational.hpp"

#include <string>

namespace ldp {

/// a + b*theta. Over a prime field both parts are residues in [0, p).
struct FieldElem {
  Rational a;
  Rational b;

  bool operator==(const FieldElem&) const = default;
};

/// Q, F_p, or a quadratic extension base[theta]/(theta^2 + c1 theta + c0).
/// Elements are plain values; the Field object carries the arithmetic.
class Field {
 public:
  static Field rationals();
  /// Throws InvalidArgument unless p is prime.
  static Field prime(const Integer& p);
  /// Throws InvalidArgument if this is already an extension or the modulus
  /// has a root in the base field.
  Field quadratic(const Rational& c1, const Rational& c0) const;

  const Integer& characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0 && !ext_; }
  bool is_extension() const { return ext_; }
  /// Modulus coefficients (c1, c0); zero when not an extension.
  const Rational& c1() const { return c1_; }
  const Rational& c0() const { return c0_; }
  /// Underlying Q or F_p.
  Field base() const;

  FieldElem zero() const { return {Rational(0), Rational(0)}; }
  FieldElem one() const { return {Rational(1), Rational(0)}; }
  /// Image of a rational number. Throws InvalidArgument if p divides the denominator.
  FieldElem from(const Rational& q) const;
  /// Throws InvalidArgument when not an extension.
  FieldElem theta() const;
  FieldElem make(const Rational& a, const Rational& b) const;

  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem sub(const FieldElem& x, const FieldElem& y) const;
  FieldElem neg(const FieldElem& x) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;
  /// Throws InvalidArgument on zero.
  FieldElem inv(const FieldElem& x) const;
  FieldElem div(const FieldElem& x, const FieldElem& y) const { return mul(x, inv(y)); }
  FieldElem pow(FieldElem x, unsigned e) const;
  bool is_zero(const FieldElem& x) const { return x.a == 0 && x.b == 0; }

  /// Galois conjugate a + b*theta' with theta' = -c1 - theta. Identity off extensions.
  FieldElem conjugate(const FieldElem& x) const;
  /// x * conjugate(x), in the base field.
  Rational norm(const FieldElem& x) const;
  /// x + conjugate(x), in the base field.
  Rational trace(const FieldElem& x) const;

  /// Rendered as "a", "b*t" or "a+b*t" with t the generator name.
  std::string format(const FieldElem& x, const std::string& generator = "t") const;
  /// "Q", "F_5", "F_7[t]/(t^2+4t+6)" and so on.
  std::string name() const;

  bool operator==(const Field& o) const = default;

 private:
  Rational reduce(const Rational& q) const;

  Integer p_ = 0;
  bool ext_ = false;
  Rational c1_ = 0;
  Rational c0_ = 0;
};

bool is_prime(const Integer& n);

}  // namespace ldp
