#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ldp {

using Integer = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// n/d for any nonzero d; the Boost constructor rejects negative denominators.
inline Rational ratio(const Integer& n, const Integer& d) {
  return d < 0 ? Rational(Integer(-n), Integer(-d)) : Rational(n, d);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p" and "p/q"; throws ldp::Error on malformed input or q == 0.
Rational parse_rational(std::string_view text);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

}  // namespace ldp
