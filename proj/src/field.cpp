#include "ldp/field.hpp"

#include "ldp/error.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ldp {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::rationals() { return Field(); }

Field Field::prime(const Integer& p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::base() const {
  Field f;
  f.p_ = p_;
  return f;
}

Field Field::quadratic(const Rational& c1, const Rational& c0) const {
  if (ext_) throw Error(ErrorKind::InvalidArgument, "towers of extensions are not supported");
  Field f = *this;
  f.ext_ = true;
  f.c1_ = reduce(c1);
  f.c0_ = reduce(c0);
  bool has_root = false;
  if (p_ == 0) {
    Rational disc = f.c1_ * f.c1_ - 4 * f.c0_;
    if (disc >= 0) {
      Integer n = numerator(disc), d = denominator(disc);
      Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
      has_root = rn * rn == n && rd * rd == d;
    }
  } else {
    for (Integer x = 0; x < p_ && !has_root; ++x) {
      has_root = reduce(Rational(x * x) + f.c1_ * Rational(x) + f.c0_) == 0;
    }
  }
  if (has_root) throw Error(ErrorKind::InvalidArgument, "extension modulus is reducible over " + name());
  return f;
}

Rational Field::reduce(const Rational& q) const {
  if (p_ == 0) return q;
  if (denominator(q) == 1) {
    Integer r = numerator(q) % p_;
    return Rational(r < 0 ? Integer(r + p_) : r);
  }
  Integer d = denominator(q) % p_;
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
  // d^{-1} mod p by Fermat.
  Integer dinv = boost::multiprecision::powm(d, p_ - 2, p_);
  Integer r = (numerator(q) % p_) * dinv % p_;
  if (r < 0) r += p_;
  return Rational(r);
}

FieldElem Field::from(const Rational& q) const { return {reduce(q), Rational(0)}; }

FieldElem Field::theta() const {
  if (!ext_) throw Error(ErrorKind::InvalidArgument, "field has no generator");
  return {Rational(0), Rational(1)};
}

FieldElem Field::make(const Rational& a, const Rational& b) const {
  if (!ext_ && b != 0) throw Error(ErrorKind::InvalidArgument, "field has no generator");
  return {reduce(a), reduce(b)};
}

FieldElem Field::add(const FieldElem& x, const FieldElem& y) const { return {reduce(x.a + y.a), reduce(x.b + y.b)}; }

FieldElem Field::sub(const FieldElem& x, const FieldElem& y) const { return {reduce(x.a - y.a), reduce(x.b - y.b)}; }

FieldElem Field::neg(const FieldElem& x) const { return {reduce(-x.a), reduce(-x.b)}; }

FieldElem Field::mul(const FieldElem& x, const FieldElem& y) const {
  // theta^2 = -c1 theta - c0
  Rational bb = x.b * y.b;
  return {reduce(x.a * y.a - c0_ * bb), reduce(x.a * y.b + x.b * y.a - c1_ * bb)};
}

Rational Field::norm(const FieldElem& x) const {
  // (a + b t)(a + b t') = a^2 + ab(t + t') + b^2 t t' = a^2 - c1 ab + c0 b^2
  return reduce(x.a * x.a - c1_ * x.a * x.b + c0_ * x.b * x.b);
}

Rational Field::trace(const FieldElem& x) const { return reduce(2 * x.a - c1_ * x.b); }

FieldElem Field::conjugate(const FieldElem& x) const {
  if (!ext_) return x;
  return {reduce(x.a - c1_ * x.b), reduce(-x.b)};
}

FieldElem Field::inv(const FieldElem& x) const {
  if (is_zero(x)) throw Error(ErrorKind::InvalidArgument, "division by zero in " + name());
  Rational n = norm(x);
  FieldElem c = conjugate(x);
  return mul(c, from(1 / n));
}

FieldElem Field::pow(FieldElem x, unsigned e) const {
  FieldElem r = one();
  while (e) {
    if (e & 1u) r = mul(r, x);
    x = mul(x, x);
    e >>= 1u;
  }
  return r;
}

std::string Field::format(const FieldElem& x, const std::string& generator) const {
  if (x.b == 0) return to_string(x.a);
  std::string bpart = x.b == 1 ? generator : to_string(x.b) + "*" + generator;
  if (x.a == 0) return bpart;
  if (p_ == 0 && x.b < 0) {
    Rational mb = -x.b;
    return to_string(x.a) + "-" + (mb == 1 ? generator : to_string(mb) + "*" + generator);
  }
  return to_string(x.a) + "+" + bpart;
}

std::string Field::name() const {
  std::string b = p_ == 0 ? "Q" : "F_" + to_string(p_);
  if (!ext_) return b;
  auto term = [](const Rational& c, const std::string& mono) {
    if (c == 0) return std::string();
    std::string s = c < 0 ? "-" : "+";
    Rational m = c < 0 ? Rational(-c) : c;
    if (m != 1 || mono.empty()) s += to_string(m);
    return s + mono;
  };
  return b + "[t]/(t^2" + term(c1_, "t") + term(c0_, "") + ")";
}

}  // namespace ldp
