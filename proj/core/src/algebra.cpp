#include "ternac/algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ternac {

Algebra::Algebra(std::size_t dim, int arity, Field field) : dim_(dim), arity_(arity), field_(field) {
  if (dim == 0) throw std::invalid_argument("algebra dimension must be positive");
  if (arity != 2 && arity != 3) throw std::invalid_argument("arity must be 2 or 3");
  input_count_ = 1;
  for (int k = 0; k < arity; ++k) input_count_ *= dim;
  constants_.resize(input_count_ * dim);
}

std::size_t Algebra::flat_input(std::span<const std::size_t> inputs) const {
  if (inputs.size() != static_cast<std::size_t>(arity_)) throw DimensionMismatch("wrong number of input indices");
  std::size_t flat = 0;
  for (std::size_t i : inputs) {
    if (i >= dim_) throw DimensionMismatch("basis index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

const Scalar& Algebra::constant(std::span<const std::size_t> inputs, std::size_t s) const {
  if (s >= dim_) throw DimensionMismatch("output index out of range");
  return constants_[flat_input(inputs) * dim_ + s];
}

void Algebra::set_constant(std::span<const std::size_t> inputs, std::size_t s, Scalar value) {
  if (s >= dim_) throw DimensionMismatch("output index out of range");
  if (!value.belongs_to(field_)) throw std::invalid_argument("constant " + value.str() + " is not in " + field_name(field_));
  constants_[flat_input(inputs) * dim_ + s] = std::move(value);
}

Vector Algebra::eval(std::span<const Vector> args) const {
  if (args.size() != static_cast<std::size_t>(arity_)) throw DimensionMismatch("wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != dim_) throw DimensionMismatch("argument length does not match algebra dimension");

  Vector out(dim_);
  std::array<std::size_t, 3> idx{};
  for (std::size_t flat = 0; flat < input_count_; ++flat) {
    std::size_t rest = flat;
    for (int k = arity_; k-- > 0;) {
      idx[k] = rest % dim_;
      rest /= dim_;
    }
    Scalar w = args[0][idx[0]];
    if (w.is_zero()) continue;
    bool zero = false;
    for (int k = 1; k < arity_ && !zero; ++k) {
      const Scalar& a = args[k][idx[k]];
      if (a.is_zero()) zero = true;
      else w *= a;
    }
    if (zero) continue;
    auto p = product(flat);
    for (std::size_t s = 0; s < dim_; ++s) add_product(out[s], w, p[s]);
  }
  return out;
}

Vector Algebra::eval(const Vector& a, const Vector& b) const {
  std::array<Vector, 2> args{a, b};
  return eval(args);
}

Vector Algebra::eval(const Vector& a, const Vector& b, const Vector& c) const {
  std::array<Vector, 3> args{a, b, c};
  return eval(args);
}

bool Algebra::is_zero() const {
  return std::all_of(constants_.begin(), constants_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Algebra::is_real() const {
  return std::all_of(constants_.begin(), constants_.end(), [](const Scalar& s) { return s.is_real(); });
}

Vector basis_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

Algebra induced_lie_bracket(const Algebra& alg) {
  if (!alg.is_ternary()) throw std::invalid_argument("induced bracket needs a ternary algebra");
  static constexpr std::array<std::array<std::size_t, 3>, 6> perms{
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  static constexpr std::array<int, 6> signs{1, 1, 1, -1, -1, -1};
  const std::size_t n = alg.dim();
  Algebra out(n, 3, alg.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::array<std::size_t, 3> x{i, j, k};
        Vector acc(n);
        for (std::size_t p = 0; p < perms.size(); ++p) {
          std::array<std::size_t, 3> y{x[perms[p][0]], x[perms[p][1]], x[perms[p][2]]};
          auto prod = alg.product(alg.flat_input(y));
          for (std::size_t s = 0; s < n; ++s) {
            if (signs[p] > 0) acc[s] += prod[s];
            else acc[s] -= prod[s];
          }
        }
        for (std::size_t s = 0; s < n; ++s) out.set_constant(x, s, acc[s]);
      }
  return out;
}

}  // namespace ternac
