#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fitforge/errors.hpp"

namespace fitforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ordered set of variable names. The order fixed at creation is the canonical
// variable order used by the graded lexicographic term order.
class VarSet {
public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  static VarSet from_csv(const std::string& csv);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;

  bool operator==(const VarSet&) const = default;

private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Exponent vector; variables with exponent zero are absent.
class Monomial {
public:
  Monomial() = default;
  static Monomial variable(int v, int e = 1);

  bool is_one() const { return exps_.empty(); }
  int degree() const;
  int exponent(int v) const;
  void set_exponent(int v, int e);
  const std::map<int, int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Exact quotient, requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  // Graded lexicographic order.
  bool operator<(const Monomial& other) const;

private:
  std::map<int, int> exps_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// No zero coefficients are ever stored; equality is term-map equality.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(const Monomial& m, const Rational& c = 1);
  static Poly variable(int v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Single-term polynomial.
  bool is_term() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Constant coefficient; the whole value when is_constant().
  Rational constant_value() const;
  // Leading (grlex-largest) term; requires non-zero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  int degree() const;

  Poly operator-() const;
  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly& operator+=(const Poly&);
  Poly& operator-=(const Poly&);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const Rational&) const;
  Poly pow(int e) const;

  bool operator==(const Poly&) const = default;

  // Simultaneous substitution; variables absent from the map are left fixed.
  Poly substitute(const std::map<int, Poly>& map) const;

  // Exponent-wise minimum monomial dividing every term. Requires non-zero.
  Monomial monomial_content() const;
  // Exact division by a monomial dividing every term.
  Poly divide_by_monomial(const Monomial& m) const;

  // Exact polynomial division: returns *this / d when d divides exactly,
  // nullopt otherwise. d must be non-zero.
  std::optional<Poly> try_divide(const Poly& d) const;

  // Variables actually occurring.
  std::vector<int> support() const;
  // If all terms involve at most one common variable, returns it (or -1 for
  // constants); nullopt when two or more variables occur.
  std::optional<int> single_variable() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// Univariate helpers used by Smith normal form and unit detection. Polynomials
// must involve at most the single variable v.
Poly univariate_divmod(const Poly& a, const Poly& b, int v, Poly* quotient);
Poly univariate_gcd(const Poly& a, const Poly& b, int v);

// Canonical rendering: graded lexicographic, highest term first.
std::string render_monomial(const Monomial& m, const VarSet& vars);
std::string render_poly(const Poly& p, const VarSet& vars);

}  // namespace fitforge
