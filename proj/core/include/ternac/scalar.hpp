#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ternac {

/// Ground field of an algebra: the rationals or the Gaussian rationals Q(i).
enum class Field { Rational, Gaussian };

std::string field_name(Field field);  // "Q" or "Q(i)"
Field parse_field(std::string_view text);

/// Raised on division by zero.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a scalar string is malformed.
class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact element of Q(i): real and imaginary parts are canonical GMP
/// rationals (positive denominator, reduced). Plain rationals have a zero
/// imaginary part.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar fraction(long numerator, long denominator);
  static Scalar i();

  /// Accepts "p", "p/q", "p/q+r/s i" and the usual variants ("i", "-3i",
  /// "1-i"). Whitespace next to '/' is rejected.
  static Scalar parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool belongs_to(Field field) const { return field == Field::Gaussian || is_real(); }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (real part, then imaginary part); used only for
  /// deterministic sorting, not a field order.
  friend std::strong_ordering compare(const Scalar& a, const Scalar& b);

  std::string str() const;

  /// acc += a * b, avoiding temporaries in the common real case.
  friend void add_product(Scalar& acc, const Scalar& a, const Scalar& b);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace ternac
