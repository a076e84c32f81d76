#include "ternac/coboundary.hpp"

#include <array>
#include <string>
#include <utility>

namespace ternac {

namespace {

constexpr std::string_view kSymbol = "f";

std::vector<FreeTerm> vars(std::size_t k) { return std::vector<FreeTerm>(k, FreeTerm::variable()); }

FreeTerm op(int arity, std::vector<FreeTerm> args) {
  return FreeTerm::operation(arity == 3 ? kTernaryOp : kBinaryOp, std::move(args));
}

// f(x.., op(x_i..x_{i+a-1}), ..) with f of arity k.
FreeTerm f_with_op_at(std::size_t k, int a, std::size_t i) {
  std::vector<FreeTerm> args = vars(k);
  args[i] = op(a, vars(static_cast<std::size_t>(a)));
  return FreeTerm::symbol(kSymbol, std::move(args));
}

// op(x.., f(x_i..x_{i+k-1}), ..).
FreeTerm op_with_f_at(int a, std::size_t k, std::size_t i) {
  std::vector<FreeTerm> args = vars(static_cast<std::size_t>(a));
  args[i] = FreeTerm::symbol_on_variables(kSymbol, k);
  return op(a, std::move(args));
}

Scalar sign(std::size_t e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

LinearForm associator_linearization(int e2, int e3) {
  LinearForm form;
  const std::array<int, 3> s{1, e2, e3};
  for (std::size_t i = 0; i < 3; ++i) {
    form.add(op_with_f_at(3, 3, i), s[i]);
    form.add(f_with_op_at(3, 3, i), s[i]);
  }
  return form;
}

LinearForm partial_delta1() {
  LinearForm form;
  form.add(f_with_op_at(1, 3, 0), 1);
  for (std::size_t i = 0; i < 3; ++i) form.add(op_with_f_at(3, 1, i), -1);
  return form;
}

LinearForm weak_delta(std::size_t p, WeakVariant variant) {
  LinearForm form;
  if (p == 1 && variant == WeakVariant::Explicit) {
    for (std::size_t i = 0; i < 3; ++i) form.add(op_with_f_at(3, 1, i), 1);
    form.add(f_with_op_at(1, 3, 0), -1);
    return form;
  }
  const std::size_t k = 2 * p - 1;
  form.add(op_with_f_at(3, k, 2), 1);
  for (std::size_t i = 1; i <= p; ++i)
    form.add(f_with_op_at(k, 3, 2 * i - 2), variant == WeakVariant::RemarkDisplay ? Scalar(1) : sign(i));
  form.add(op_with_f_at(3, k, 0), variant == WeakVariant::RemarkDisplay ? sign(p) : sign(p + 1));
  return form;
}

LinearForm hochschild_delta(std::size_t p) {
  LinearForm form;
  form.add(op_with_f_at(2, p, 1), 1);
  for (std::size_t i = 1; i <= p; ++i) form.add(f_with_op_at(p, 2, i - 1), sign(i));
  form.add(op_with_f_at(2, p, 0), sign(p + 1));
  return form;
}

LinearForm skew_delta(std::size_t p) {
  LinearForm form;
  if (p == 1) {
    form.add(f_with_op_at(1, 2, 0), 1);
    form.add(op_with_f_at(2, 1, 0), -1);
    form.add(op_with_f_at(2, 1, 1), -1);
  } else {
    form.add(op_with_f_at(2, 2, 0), 1);
    form.add(op_with_f_at(2, 2, 1), 1);
    form.add(f_with_op_at(2, 2, 0), 1);
    form.add(f_with_op_at(2, 2, 1), 1);
  }
  return form;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

void unflatten(std::size_t flat, std::size_t n, std::vector<std::size_t>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = flat % n;
    flat /= n;
  }
}

void require_operations(const Algebra& alg, const FreeTerm& t) {
  for (const auto& node : t.nodes()) {
    if (node.kind == NodeKind::Tensor) throw std::invalid_argument("tensor nodes cannot be evaluated on an algebra");
    if (node.kind == NodeKind::Operation && node.arity != alg.arity())
      throw std::invalid_argument("operator arity does not match the algebra");
  }
}

// Concrete evaluation on a basis tuple.
Vector eval_concrete(const Algebra& alg, const Cochain& f, const FreeTerm& t, std::size_t& pos,
                     const std::vector<std::size_t>& tuple, std::size_t& var) {
  const Node& node = t.nodes()[pos++];
  if (node.kind == NodeKind::Variable) return basis_vector(alg.dim(), tuple[var++]);
  std::vector<Vector> args;
  for (std::size_t k = 0; k < node.arity; ++k) args.push_back(eval_concrete(alg, f, t, pos, tuple, var));
  if (node.kind == NodeKind::Operation) return alg.eval(args);
  return f.eval(args);
}

// Value that is either a plain vector or linear in the cochain table: the
// parts (c, w) stand for sum over c of table[c] * w.
struct LinearValue {
  bool linear = false;
  Vector plain;
  std::vector<std::pair<std::size_t, Vector>> parts;
};

void enumerate_support(const std::vector<Vector>& args, std::size_t slot, std::size_t flat, const Scalar& weight,
                       std::size_t n, std::vector<std::pair<std::size_t, Scalar>>& out) {
  if (slot == args.size()) {
    out.emplace_back(flat, weight);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& a = args[slot][i];
    if (a.is_zero()) continue;
    enumerate_support(args, slot + 1, flat * n + i, weight * a, n, out);
  }
}

LinearValue eval_linear(const Algebra& alg, const FreeTerm& t, std::size_t& pos, const std::vector<std::size_t>& tuple,
                        std::size_t& var) {
  const std::size_t n = alg.dim();
  const Node& node = t.nodes()[pos++];
  if (node.kind == NodeKind::Variable) return {false, basis_vector(n, tuple[var++]), {}};
  std::vector<LinearValue> children;
  std::size_t linear_child = node.arity;
  for (std::size_t k = 0; k < node.arity; ++k) {
    children.push_back(eval_linear(alg, t, pos, tuple, var));
    if (children.back().linear) {
      if (linear_child != node.arity) throw std::invalid_argument("term is not linear in the cochain");
      linear_child = k;
    }
  }
  if (node.kind == NodeKind::Symbol) {
    if (linear_child != node.arity) throw std::invalid_argument("nested cochain symbols are not linear");
    std::vector<Vector> args;
    for (auto& c : children) args.push_back(std::move(c.plain));
    std::vector<std::pair<std::size_t, Scalar>> support;
    enumerate_support(args, 0, 0, Scalar(1), n, support);
    LinearValue out{true, {}, {}};
    for (const auto& [flat, w] : support)
      for (std::size_t s = 0; s < n; ++s) {
        Vector v(n);
        v[s] = w;
        out.parts.emplace_back(flat * n + s, std::move(v));
      }
    return out;
  }
  std::vector<Vector> args(node.arity);
  for (std::size_t k = 0; k < node.arity; ++k)
    if (k != linear_child) args[k] = std::move(children[k].plain);
  if (linear_child == node.arity) return {false, alg.eval(args), {}};
  LinearValue out{true, {}, {}};
  for (auto& [col, w] : children[linear_child].parts) {
    args[linear_child] = std::move(w);
    Vector r = alg.eval(args);
    bool zero = true;
    for (const auto& x : r) zero = zero && x.is_zero();
    if (!zero) out.parts.emplace_back(col, std::move(r));
  }
  return out;
}

Cochain output_cochain(const Algebra& alg, const OperatorTemplate& op, int arity) {
  // Degree from the input count: ternary 2p+1, binary p+1.
  std::size_t degree = arity == 3 ? (op.variables - 1) / 2 : op.variables - 1;
  return Cochain(arity, degree, alg.dim());
}

std::size_t symbol_arity(Theory theory, std::size_t p) { return cochain_inputs(theory_arity(theory), p - 1); }

}  // namespace

std::string weak_variant_name(WeakVariant v) {
  switch (v) {
    case WeakVariant::Explicit: return "explicit";
    case WeakVariant::General: return "general";
    case WeakVariant::RemarkDisplay: return "remark";
  }
  throw std::logic_error("unhandled weak variant");
}

WeakVariant parse_weak_variant(std::string_view name) {
  for (auto v : all_weak_variants())
    if (name == weak_variant_name(v)) return v;
  throw std::invalid_argument("unknown weak variant '" + std::string(name) + "'");
}

std::vector<WeakVariant> all_weak_variants() {
  return {WeakVariant::Explicit, WeakVariant::General, WeakVariant::RemarkDisplay};
}

bool delta_defined(Theory theory, std::size_t p) {
  if (p == 0) return false;
  switch (theory) {
    case Theory::TernaryWeak:
    case Theory::BinaryAssociative:
      return true;
    case Theory::TernaryPartial:
    case Theory::TernaryAlt1:
    case Theory::TernaryAlt2:
    case Theory::BinarySkew:
      return p <= 2;
  }
  return false;
}

OperatorTemplate delta_template(Theory theory, std::size_t p, WeakVariant variant) {
  if (!delta_defined(theory, p))
    throw UndefinedOperator("coboundary of degree " + std::to_string(p) + " is not defined for the " +
                            theory_name(theory) + " theory");
  LinearForm form;
  switch (theory) {
    case Theory::TernaryPartial:
      form = p == 1 ? partial_delta1() : associator_linearization(1, 1);
      break;
    case Theory::TernaryAlt1:
      form = p == 1 ? partial_delta1() : associator_linearization(-1, 1);
      break;
    case Theory::TernaryAlt2:
      form = p == 1 ? partial_delta1() : associator_linearization(-1, -1);
      break;
    case Theory::TernaryWeak:
      form = weak_delta(p, variant);
      break;
    case Theory::BinaryAssociative:
      form = hochschild_delta(p);
      break;
    case Theory::BinarySkew:
      form = skew_delta(p);
      break;
  }
  const int a = theory_arity(theory);
  return {std::move(form), std::string(kSymbol), symbol_arity(theory, p), cochain_inputs(a, p)};
}

Cochain apply_template(const Algebra& alg, const OperatorTemplate& op, const Cochain& f) {
  if (f.dim() != alg.dim()) throw DimensionMismatch("cochain and algebra dimensions differ");
  if (f.inputs() != op.symbol_arity)
    throw DimensionMismatch("operator expects a cochain with " + std::to_string(op.symbol_arity) + " inputs, got " +
                            std::to_string(f.inputs()));
  for (const auto& [t, c] : op.form) require_operations(alg, t);
  Cochain out = output_cochain(alg, op, f.family_arity());
  std::vector<std::size_t> tuple(op.variables);
  for (std::size_t flat = 0; flat < out.input_count(); ++flat) {
    unflatten(flat, alg.dim(), tuple);
    for (const auto& [t, c] : op.form) {
      std::size_t pos = 0;
      std::size_t var = 0;
      Vector v = eval_concrete(alg, f, t, pos, tuple, var);
      for (std::size_t s = 0; s < alg.dim(); ++s)
        if (!v[s].is_zero()) add_product(out.at(flat, s), c, v[s]);
    }
  }
  return out;
}

void for_each_row_block(const Algebra& alg, const OperatorTemplate& op, const RowBlockVisitor& visit) {
  for (const auto& [t, c] : op.form) require_operations(alg, t);
  const std::size_t n = alg.dim();
  const std::size_t outputs = power(n, op.variables);
  std::vector<std::size_t> tuple(op.variables);
  std::vector<SparseRow> rows(n);
  for (std::size_t flat = 0; flat < outputs; ++flat) {
    unflatten(flat, n, tuple);
    for (auto& r : rows) r.clear();
    for (const auto& [t, c] : op.form) {
      std::size_t pos = 0;
      std::size_t var = 0;
      LinearValue v = eval_linear(alg, t, pos, tuple, var);
      if (!v.linear) throw std::invalid_argument("operator term does not involve the cochain");
      for (const auto& [col, w] : v.parts)
        for (std::size_t s = 0; s < n; ++s) {
          if (w[s].is_zero()) continue;
          Scalar& entry = rows[s][col];
          add_product(entry, c, w[s]);
          if (entry.is_zero()) rows[s].erase(col);
        }
    }
    visit(flat, rows);
  }
}

ExactMatrix matrixize(const Algebra& alg, const OperatorTemplate& op) {
  const std::size_t n = alg.dim();
  ExactMatrix m(power(n, op.variables) * n, power(n, op.symbol_arity) * n);
  for_each_row_block(alg, op, [&](std::size_t flat, const std::vector<SparseRow>& rows) {
    for (std::size_t s = 0; s < n; ++s)
      for (const auto& [col, v] : rows[s]) m(flat * n + s, col) = v;
  });
  return m;
}

ExactMatrix matrixize(const Algebra& alg, Theory theory, std::size_t p, WeakVariant variant) {
  if (alg.arity() != theory_arity(theory))
    throw std::invalid_argument("the " + theory_name(theory) + " theory needs an algebra of arity " +
                                std::to_string(theory_arity(theory)));
  return matrixize(alg, delta_template(theory, p, variant));
}

void require_theory(const Algebra& alg, Theory theory) {
  if (alg.arity() != theory_arity(theory))
    throw std::invalid_argument("the " + theory_name(theory) + " theory needs an algebra of arity " +
                                std::to_string(theory_arity(theory)));
  if (!check_identity(alg, theory_identity(theory)).holds)
    throw PreconditionError("algebra does not satisfy the " + identity_name(theory_identity(theory)) + " identity");
}

Cochain delta(const Algebra& alg, Theory theory, const Cochain& f, WeakVariant variant, Check check) {
  if (check == Check::Verify) require_theory(alg, theory);
  if (f.family_arity() != theory_arity(theory)) throw DimensionMismatch("cochain family does not match the theory");
  return apply_template(alg, delta_template(theory, f.degree() + 1, variant), f);
}

Cochain delta_partial(const Algebra& alg, const Cochain& f, Check check) {
  return delta(alg, Theory::TernaryPartial, f, WeakVariant::Explicit, check);
}

Cochain delta_weak(const Algebra& alg, const Cochain& f, WeakVariant variant, Check check) {
  return delta(alg, Theory::TernaryWeak, f, variant, check);
}

Cochain delta_skew(const Algebra& alg, const Cochain& f, Check check) {
  return delta(alg, Theory::BinarySkew, f, WeakVariant::Explicit, check);
}

Cochain hochschild(const Algebra& alg, const Cochain& f, Check check) {
  return delta(alg, Theory::BinaryAssociative, f, WeakVariant::Explicit, check);
}

CohomologyReport cohomology(const Algebra& alg, Theory theory, std::size_t p, WeakVariant variant, Check check) {
  if (!delta_defined(theory, p))
    throw UndefinedOperator("cohomology in degree " + std::to_string(p) + " is not defined for the " +
                            theory_name(theory) + " theory");
  if (check == Check::Verify) require_theory(alg, theory);
  else if (alg.arity() != theory_arity(theory)) throw std::invalid_argument("algebra arity does not match the theory");
  CohomologyReport r{theory, p};
  ExactMatrix d = matrixize(alg, theory, p, variant);
  r.dim_cochains = d.cols();
  r.dim_cocycles = d.cols() - rank(d);
  r.dim_coboundaries = p >= 2 ? rank(matrixize(alg, theory, p - 1, variant)) : 0;
  if (r.dim_coboundaries > r.dim_cocycles)
    throw std::logic_error("coboundaries exceed cocycles; the operators do not form a complex");
  r.dim_h = r.dim_cocycles - r.dim_coboundaries;
  return r;
}

std::vector<Cochain> derivations(const Algebra& alg) {
  Theory theory = alg.is_ternary() ? Theory::TernaryPartial : Theory::BinarySkew;
  ExactMatrix d = matrixize(alg, theory, 1);
  std::vector<Cochain> out;
  for (const auto& v : nullspace(d)) out.push_back(Cochain::from_coordinates(alg.arity(), 0, alg.dim(), v));
  return out;
}

CompositionReport check_composition(const Algebra& alg, Theory theory, std::size_t p, WeakVariant variant) {
  ExactMatrix inner = matrixize(alg, theory, p, variant);
  OperatorTemplate outer = delta_template(theory, p + 1, variant);
  const std::size_t n = alg.dim();
  CompositionReport r{p, power(n, outer.variables) * n, inner.rows(), inner.cols(), true};
  Vector acc(inner.cols());
  for_each_row_block(alg, outer, [&](std::size_t, const std::vector<SparseRow>& rows) {
    if (!r.vanishes) return;
    for (const auto& row : rows) {
      for (auto& a : acc) a = 0;
      for (const auto& [k, v] : row) {
        auto inner_row = inner.row(k);
        for (std::size_t c = 0; c < inner.cols(); ++c) add_product(acc[c], v, inner_row[c]);
      }
      for (const auto& a : acc)
        if (!a.is_zero()) {
          r.vanishes = false;
          return;
        }
    }
  });
  return r;
}

std::vector<CompositionReport> verify_complex(const Algebra& alg, Theory theory, std::size_t pmax,
                                              WeakVariant variant, Check check) {
  if (check == Check::Verify) require_theory(alg, theory);
  std::vector<CompositionReport> out;
  for (std::size_t p = 1; p <= pmax && delta_defined(theory, p + 1); ++p)
    out.push_back(check_composition(alg, theory, p, variant));
  return out;
}

}  // namespace ternac
