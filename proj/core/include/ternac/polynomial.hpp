#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ternac/scalar.hpp"

namespace ternac {

/// Exponent vector; compared lexicographically (variable 0 is the largest).
using Monomial = std::vector<unsigned>;

/// Multivariate polynomial with Scalar coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Scalar& c);                   // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t index, std::size_t nvars);
  static Polynomial monomial(Monomial m, Scalar c);

  /// Number of variables the polynomial is expressed in (0 for constants
  /// built without a variable count; arithmetic widens as needed).
  std::size_t nvars() const { return nvars_; }
  Polynomial widened(std::size_t nvars) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Highest variable index that occurs, or -1 for constants.
  int highest_variable() const;
  /// True when only variable `index` occurs.
  bool is_univariate_in(std::size_t index) const;

  /// Leading term in lex order; throws on zero.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  Polynomial monic() const;

  const std::map<Monomial, Scalar, std::greater<>>& terms() const { return terms_; }

  /// Substitutes variable `index` := value.
  Polynomial substitute(std::size_t index, const Scalar& value) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  Polynomial conj() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Terms in decreasing lex order, e.g. "α^2*λ + α + 1".
  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  std::size_t nvars_ = 0;
  std::map<Monomial, Scalar, std::greater<>> terms_;
};

/// Reduced Gröbner basis (lex order) of the ideal generated by `polys`.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> polys);

/// Distinct roots of a univariate polynomial (in variable `index`) that
/// lie in the given field.
std::vector<Scalar> univariate_roots(const Polynomial& p, std::size_t index, Field field);

class PositiveDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All common zeros in field^nvars, sorted lexicographically. Throws
/// PositiveDimensional unless the ideal is zero-dimensional.
std::vector<std::vector<Scalar>> solve_system(const std::vector<Polynomial>& polys, std::size_t nvars, Field field);

}  // namespace ternac
