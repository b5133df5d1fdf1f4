#pragma once

#include "ldp/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldp {

/// Sparse multivariate polynomial over a Field. Monomials are ordered
/// lexicographically with the first variable largest.
class Polynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, FieldElem>;

  Polynomial() = default;
  Polynomial(Field f, std::vector<std::string> vars);

  static Polynomial constant(const Field& f, const std::vector<std::string>& vars, const FieldElem& c);
  static Polynomial constant(const Field& f, const std::vector<std::string>& vars, const Rational& c);
  /// Throws UnknownName.
  static Polynomial variable(const Field& f, const std::vector<std::string>& vars, std::string_view name);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  /// Throws UnknownName.
  std::size_t var_index(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of a monomial (zero when absent).
  FieldElem coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const FieldElem& c);

  /// Lex-leading monomial and coefficient. Throws InvalidArgument on zero.
  const Exponent& leading_exponent() const;
  const FieldElem& leading_coeff() const;
  int degree(std::size_t var) const;
  int total_degree() const;
  /// True when every monomial has weighted degree d.
  bool is_weighted_homogeneous(const std::vector<int>& weights, int d) const;
  /// Largest weighted degree among the monomials (-1 for zero).
  int weighted_degree(const std::vector<int>& weights) const;
  /// True when no variable other than `var` appears.
  bool is_univariate_in(std::size_t var) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial pow(unsigned e) const;
  /// Divided by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Monomial times this.
  Polynomial shifted(const Exponent& e, const FieldElem& c) const;

  Polynomial derivative(std::size_t var) const;
  /// Replace variable `var` by q (same field and variables).
  Polynomial substitute(std::size_t var, const Polynomial& q) const;
  Polynomial substitute(std::size_t var, const FieldElem& value) const;
  FieldElem evaluate(const std::vector<FieldElem>& point) const;

  /// Same polynomial over the image field: Q -> F_p reduction, or base -> extension.
  Polynomial mapped_to(const Field& target) const;
  /// Same terms over a new variable list; `map[i]` is the new index of variable i.
  Polynomial renamed(const std::vector<std::string>& vars, const std::vector<std::size_t>& map) const;

  bool operator==(const Polynomial& o) const;

 private:
  void check(const Polynomial& o) const;

  Field field_;
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Terms in decreasing lex order, e.g. "s^3*t - 11*s^2*t^2 - s*t^3".
std::string to_string(const Polynomial& p);

/// Normal form of p modulo the divisors (multivariate division, lex order).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors);

/// Reduced lex Groebner basis (Buchberger with the coprime-leading-term criterion).
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators);

/// True when p reduces to zero modulo a Groebner basis.
bool ideal_contains(const std::vector<Polynomial>& basis, const Polynomial& p);

/// Univariate gcd in variable `var`, monic. Throws InvalidArgument if either input
/// involves another variable.
Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b, std::size_t var);

/// p / gcd(p, p') for a univariate p; in characteristic p also strips p-th powers
/// so that the result is squarefree.
Polynomial squarefree_part(const Polynomial& p, std::size_t var);

/// Dimension of k[vars]/I over k for a Groebner basis of I, or nullopt when the
/// ideal is not zero-dimensional.
std::optional<std::size_t> quotient_dimension(const std::vector<Polynomial>& basis);

/// Generator of I intersected with k[var] for a zero-dimensional ideal, computed
/// from a lex basis with `var` moved last. Monic; nullopt if the intersection is zero.
std::optional<Polynomial> eliminant(const std::vector<Polynomial>& generators, std::size_t var);

}  // namespace ldp
