#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ternac/algebra.hpp"
#include "ternac/identity.hpp"
#include "ternac/rewrite.hpp"

namespace ternac {

enum class Theory {
  TernaryPartial,
  TernaryWeak,
  TernaryAlt1,
  TernaryAlt2,
  BinaryAssociative,  // Hochschild
  BinarySkew,
};

std::string theory_name(Theory theory);  // "partial", "weak", "alt1", "alt2", "hochschild", "skew"
Theory parse_theory(std::string_view name);
int theory_arity(Theory theory);
IdentityKind theory_identity(Theory theory);
RuleSet theory_rules(Theory theory);

/// Number of inputs of a degree-p cochain: 2p+1 for ternary families,
/// p+1 for binary ones.
std::size_t cochain_inputs(int arity, std::size_t degree);

/// Multilinear map V^{⊗k} -> V as a dense table. Entry (J, s) is stored at
/// flat(J) * n + s with J in lexicographic (base n) order.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int family_arity, std::size_t degree, std::size_t dim);

  /// The operation of `alg` as a degree-1 cochain.
  static Cochain from_algebra(const Algebra& alg);
  /// Identity map V -> V (degree 0).
  static Cochain identity(int family_arity, std::size_t dim);
  /// Degree-0 cochain with the given matrix entries f(e_j) = sum_s a[s][j] e_s.
  static Cochain from_matrix(int family_arity, const ExactMatrix& a);
  /// Cochain whose table is the given coordinate vector.
  static Cochain from_coordinates(int family_arity, std::size_t degree, std::size_t dim, std::span<const Scalar> c);

  int family_arity() const { return arity_; }
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t input_count() const { return input_count_; }
  std::size_t size() const { return table_.size(); }

  std::span<const Scalar> table() const { return table_; }
  Scalar& at(std::size_t flat_input, std::size_t s) { return table_[flat_input * dim_ + s]; }
  const Scalar& at(std::size_t flat_input, std::size_t s) const { return table_[flat_input * dim_ + s]; }
  std::size_t flat_input(std::span<const std::size_t> inputs) const;
  std::vector<std::size_t> unflatten(std::size_t flat_input) const;
  std::span<const Scalar> value(std::size_t flat_input) const { return {table_.data() + flat_input * dim_, dim_}; }

  /// Multilinear evaluation.
  Vector eval(std::span<const Vector> args) const;

  /// Degree-1 cochain viewed as an algebra operation.
  Algebra to_algebra(Field field = Field::Gaussian) const;

  bool is_zero() const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Scalar& c);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(Cochain a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  void require_compatible(const Cochain& other) const;

  int arity_ = 3;
  std::size_t degree_ = 0;
  std::size_t dim_ = 0;
  std::size_t inputs_ = 1;
  std::size_t input_count_ = 0;
  std::vector<Scalar> table_;
};

/// (phi ∘ psi)(x_1..) = sum over insertion slots i of phi(.., psi(x_{i+1}..), ..).
/// The result has inputs(phi) + inputs(psi) - 1 inputs.
Cochain circle(const Cochain& phi, const Cochain& psi);

}  // namespace ternac
