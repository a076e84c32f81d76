#include "ternac/cochain.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ternac {

namespace {

struct TheoryInfo {
  Theory theory;
  const char* name;
  int arity;
  IdentityKind identity;
  RuleSet rules;
};

constexpr std::array<TheoryInfo, 6> kTheories{{
    {Theory::TernaryPartial, "partial", 3, IdentityKind::PartiallyAssociative, RuleSet::PartialTernary},
    {Theory::TernaryWeak, "weak", 3, IdentityKind::WeakTotallyAssociative, RuleSet::WeakTernary},
    {Theory::TernaryAlt1, "alt1", 3, IdentityKind::AlternateFirstKind, RuleSet::Alt1Ternary},
    {Theory::TernaryAlt2, "alt2", 3, IdentityKind::AlternateSecondKind, RuleSet::Alt2Ternary},
    {Theory::BinaryAssociative, "hochschild", 2, IdentityKind::BinaryAssociative, RuleSet::AssocBinary},
    {Theory::BinarySkew, "skew", 2, IdentityKind::BinarySkewAssociative, RuleSet::SkewBinary},
}};

const TheoryInfo& info(Theory t) {
  for (const auto& k : kTheories)
    if (k.theory == t) return k;
  throw std::logic_error("unhandled theory");
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

std::string theory_name(Theory theory) { return info(theory).name; }

Theory parse_theory(std::string_view name) {
  for (const auto& k : kTheories)
    if (name == k.name) return k.theory;
  if (name == "assoc" || name == "associative") return Theory::BinaryAssociative;
  throw std::invalid_argument("unknown theory '" + std::string(name) + "'");
}

int theory_arity(Theory theory) { return info(theory).arity; }
IdentityKind theory_identity(Theory theory) { return info(theory).identity; }
RuleSet theory_rules(Theory theory) { return info(theory).rules; }

std::size_t cochain_inputs(int arity, std::size_t degree) {
  if (arity == 3) return 2 * degree + 1;
  if (arity == 2) return degree + 1;
  throw std::invalid_argument("cochain family arity must be 2 or 3");
}

Cochain::Cochain(int family_arity, std::size_t degree, std::size_t dim)
    : arity_(family_arity), degree_(degree), dim_(dim), inputs_(cochain_inputs(family_arity, degree)) {
  if (dim == 0) throw std::invalid_argument("cochain dimension must be positive");
  input_count_ = power(dim, inputs_);
  table_.resize(input_count_ * dim);
}

Cochain Cochain::from_algebra(const Algebra& alg) {
  Cochain c(alg.arity(), 1, alg.dim());
  std::copy(alg.constants().begin(), alg.constants().end(), c.table_.begin());
  return c;
}

Cochain Cochain::identity(int family_arity, std::size_t dim) {
  Cochain c(family_arity, 0, dim);
  for (std::size_t k = 0; k < dim; ++k) c.at(k, k) = 1;
  return c;
}

Cochain Cochain::from_matrix(int family_arity, const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("degree-0 cochain needs a square matrix");
  Cochain c(family_arity, 0, a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t s = 0; s < a.rows(); ++s) c.at(j, s) = a(s, j);
  return c;
}

Cochain Cochain::from_coordinates(int family_arity, std::size_t degree, std::size_t dim, std::span<const Scalar> v) {
  Cochain c(family_arity, degree, dim);
  if (v.size() != c.size()) throw DimensionMismatch("coordinate vector does not match cochain size");
  std::copy(v.begin(), v.end(), c.table_.begin());
  return c;
}

std::size_t Cochain::flat_input(std::span<const std::size_t> inputs) const {
  if (inputs.size() != inputs_) throw DimensionMismatch("wrong number of cochain inputs");
  std::size_t flat = 0;
  for (std::size_t i : inputs) {
    if (i >= dim_) throw DimensionMismatch("basis index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

std::vector<std::size_t> Cochain::unflatten(std::size_t flat) const {
  std::vector<std::size_t> out(inputs_);
  for (std::size_t k = inputs_; k-- > 0;) {
    out[k] = flat % dim_;
    flat /= dim_;
  }
  return out;
}

namespace {

void eval_rec(const Cochain& c, std::span<const Vector> args, std::size_t slot, std::size_t flat, const Scalar& weight,
              Vector& out) {
  if (slot == args.size()) {
    auto v = c.value(flat);
    for (std::size_t s = 0; s < out.size(); ++s) add_product(out[s], weight, v[s]);
    return;
  }
  const Vector& a = args[slot];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    eval_rec(c, args, slot + 1, flat * c.dim() + i, weight * a[i], out);
  }
}

}  // namespace

Vector Cochain::eval(std::span<const Vector> args) const {
  if (args.size() != inputs_) throw DimensionMismatch("wrong number of cochain arguments");
  for (const auto& a : args)
    if (a.size() != dim_) throw DimensionMismatch("argument length does not match cochain dimension");
  Vector out(dim_);
  eval_rec(*this, args, 0, 0, Scalar(1), out);
  return out;
}

Algebra Cochain::to_algebra(Field field) const {
  if (degree_ != 1) throw std::invalid_argument("only degree-1 cochains are operations");
  bool real = std::all_of(table_.begin(), table_.end(), [](const Scalar& s) { return s.is_real(); });
  Algebra alg(dim_, arity_, real ? Field::Rational : field);
  for (std::size_t flat = 0; flat < input_count_; ++flat) {
    auto idx = unflatten(flat);
    for (std::size_t s = 0; s < dim_; ++s)
      if (!at(flat, s).is_zero()) alg.set_constant(idx, s, at(flat, s));
  }
  return alg;
}

bool Cochain::is_zero() const {
  return std::all_of(table_.begin(), table_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Cochain::require_compatible(const Cochain& other) const {
  if (arity_ != other.arity_ || degree_ != other.degree_ || dim_ != other.dim_)
    throw DimensionMismatch("cochains have different shapes");
}

Cochain& Cochain::operator+=(const Cochain& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < table_.size(); ++k)
    if (!other.table_[k].is_zero()) table_[k] += other.table_[k];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < table_.size(); ++k)
    if (!other.table_[k].is_zero()) table_[k] -= other.table_[k];
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& c) {
  for (auto& x : table_)
    if (!x.is_zero()) x *= c;
  return *this;
}

Cochain circle(const Cochain& phi, const Cochain& psi) {
  if (phi.family_arity() != psi.family_arity()) throw DimensionMismatch("circle needs cochains of the same family");
  if (phi.dim() != psi.dim()) throw DimensionMismatch("circle needs cochains of the same dimension");
  const std::size_t n = phi.dim();
  const std::size_t a = phi.inputs();
  const std::size_t b = psi.inputs();
  Cochain out(phi.family_arity(), phi.degree() + psi.degree(), n);
  // Insert psi at slot i of phi: inputs x_1..x_i, psi(x_{i+1}..x_{i+b}), x_{i+b+1}..
  for (std::size_t flat = 0; flat < out.input_count(); ++flat) {
    auto x = out.unflatten(flat);
    Vector acc(n);
    for (std::size_t i = 0; i < a; ++i) {
      std::size_t inner = 0;
      for (std::size_t k = 0; k < b; ++k) inner = inner * n + x[i + k];
      auto inner_value = psi.value(inner);
      std::size_t prefix = 0;
      for (std::size_t k = 0; k < i; ++k) prefix = prefix * n + x[k];
      std::size_t suffix = 0;
      std::size_t suffix_scale = 1;
      for (std::size_t k = i + b; k < x.size(); ++k) {
        suffix = suffix * n + x[k];
        suffix_scale *= n;
      }
      for (std::size_t t = 0; t < n; ++t) {
        if (inner_value[t].is_zero()) continue;
        std::size_t outer = ((prefix * n) + t) * suffix_scale + suffix;
        auto v = phi.value(outer);
        for (std::size_t s = 0; s < n; ++s) add_product(acc[s], inner_value[t], v[s]);
      }
    }
    for (std::size_t s = 0; s < n; ++s) out.at(flat, s) = std::move(acc[s]);
  }
  return out;
}

}  // namespace ternac
