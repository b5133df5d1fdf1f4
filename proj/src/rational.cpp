#include "ldp/rational.hpp"

#include "ldp/error.hpp"

#include <cctype>

namespace ldp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::ZeroIncidence: return "ZeroIncidence";
    case ErrorKind::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::AllDuVal: return "AllDuVal";
    case ErrorKind::AmbiguousSupport: return "AmbiguousSupport";
    case ErrorKind::NonIntegralClass: return "NonIntegralClass";
    case ErrorKind::RayOrthogonal: return "RayOrthogonal";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::NotSingularMember: return "NotSingularMember";
    case ErrorKind::MultipleSingularPoints: return "MultipleSingularPoints";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer quotient = n / d;  // truncates toward zero
  if (n < 0 && quotient * d != n) --quotient;
  return quotient;
}

Integer ceil(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer quotient = n / d;
  if (n > 0 && quotient * d != n) ++quotient;
  return quotient;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return ratio(num, den);
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace ldp
