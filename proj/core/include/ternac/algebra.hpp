#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ternac/matrix.hpp"
#include "ternac/scalar.hpp"

namespace ternac {

/// Finite-dimensional algebra with one multilinear operation of arity 2
/// (binary) or 3 (ternary), stored by structure constants.
///
/// Indices are 0-based. The constant C^s_{i1..ia} lives at
/// flat(i1..ia) * n + s where flat() is the lexicographic (base n) index.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::size_t dim, int arity, Field field = Field::Rational);

  static Algebra ternary(std::size_t dim, Field field = Field::Rational) { return {dim, 3, field}; }
  static Algebra binary(std::size_t dim, Field field = Field::Rational) { return {dim, 2, field}; }

  std::size_t dim() const { return dim_; }
  int arity() const { return arity_; }
  Field field() const { return field_; }
  bool is_ternary() const { return arity_ == 3; }

  /// Number of basis input tuples, n^arity.
  std::size_t input_count() const { return input_count_; }
  std::size_t flat_input(std::span<const std::size_t> inputs) const;

  const Scalar& constant(std::span<const std::size_t> inputs, std::size_t s) const;
  void set_constant(std::span<const std::size_t> inputs, std::size_t s, Scalar value);

  /// Output vector of the operation on the basis tuple with flat index `flat`.
  std::span<const Scalar> product(std::size_t flat) const { return {constants_.data() + flat * dim_, dim_}; }
  std::span<const Scalar> constants() const { return constants_; }

  /// Multilinear extension. Throws DimensionMismatch on wrong arity or length.
  Vector eval(std::span<const Vector> args) const;
  Vector eval(const Vector& a, const Vector& b) const;
  Vector eval(const Vector& a, const Vector& b, const Vector& c) const;

  bool is_zero() const;
  /// True when every constant lies in Q.
  bool is_real() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::size_t dim_ = 0;
  int arity_ = 3;
  Field field_ = Field::Rational;
  std::size_t input_count_ = 0;
  std::vector<Scalar> constants_;
};

/// e_k as a coordinate vector of length n.
Vector basis_vector(std::size_t n, std::size_t k);

/// [x1,x2,x3] = sum over S3 of sgn(sigma) m(x_sigma(1), x_sigma(2), x_sigma(3)).
Algebra induced_lie_bracket(const Algebra& alg);

}  // namespace ternac
