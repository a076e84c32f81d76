#include "ternac/nogo.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace ternac {

namespace {

struct CaseInfo {
  NogoCase which;
  const char* name;
  Theory theory;
};

constexpr std::array<CaseInfo, 5> kCases{{
    {NogoCase::TernaryPartial, "ternary-partial", Theory::TernaryPartial},
    {NogoCase::TernaryAlt1, "ternary-alt1", Theory::TernaryAlt1},
    {NogoCase::TernaryAlt2, "ternary-alt2", Theory::TernaryAlt2},
    {NogoCase::BinarySkew, "binary-skew", Theory::BinarySkew},
    {NogoCase::TernaryWeak, "ternary-weak", Theory::TernaryWeak},
}};

const CaseInfo& info(NogoCase c) {
  for (const auto& k : kCases)
    if (k.which == c) return k;
  throw std::logic_error("unhandled no-go case");
}

constexpr std::string_view kSymbol = "f";

std::vector<FreeTerm> vars(std::size_t k) { return std::vector<FreeTerm>(k, FreeTerm::variable()); }

FreeTerm op(int arity, std::vector<FreeTerm> args) {
  return FreeTerm::operation(arity == 3 ? kTernaryOp : kBinaryOp, std::move(args));
}

FreeTerm op_with_f_at(int a, std::size_t k, std::size_t i) {
  std::vector<FreeTerm> args = vars(static_cast<std::size_t>(a));
  args[i] = FreeTerm::symbol_on_variables(kSymbol, k);
  return op(a, std::move(args));
}

FreeTerm f_with_op_at(std::size_t k, int a, std::size_t i) {
  std::vector<FreeTerm> args = vars(k);
  args[i] = op(a, vars(static_cast<std::size_t>(a)));
  return FreeTerm::symbol(kSymbol, std::move(args));
}

LinearForm pattern_composition(const Ansatz& ansatz, std::size_t k, const OperatorTemplate& inner, RuleSet rules) {
  OperatorTemplate outer{LinearForm(ansatz.patterns[k]), std::string(kSymbol), ansatz.symbol_arity, ansatz.variables};
  return normalize(compose(outer, inner).form, rules);
}

}  // namespace

std::string nogo_case_name(NogoCase c) { return info(c).name; }

NogoCase parse_nogo_case(std::string_view name) {
  for (const auto& k : kCases)
    if (name == k.name) return k.which;
  throw std::invalid_argument("unknown no-go case '" + std::string(name) + "'");
}

std::vector<NogoCase> all_nogo_cases() {
  std::vector<NogoCase> out;
  for (const auto& k : kCases) out.push_back(k.which);
  return out;
}

Theory nogo_theory(NogoCase c) { return info(c).theory; }

Ansatz build_ansatz(NogoCase c) {
  Ansatz a{c, {}, 0, 0};
  if (c == NogoCase::BinarySkew) {
    a.symbol_arity = 3;
    a.variables = 4;
    a.patterns = {op_with_f_at(2, 3, 1), f_with_op_at(3, 2, 0), f_with_op_at(3, 2, 1), f_with_op_at(3, 2, 2),
                  op_with_f_at(2, 3, 0)};
    return a;
  }
  a.symbol_arity = 5;
  a.variables = 7;
  a.patterns = {op_with_f_at(3, 5, 2), op_with_f_at(3, 5, 1), op_with_f_at(3, 5, 0)};
  for (std::size_t i = 0; i < 5; ++i) a.patterns.push_back(f_with_op_at(5, 3, i));
  return a;
}

std::optional<Vector> ansatz_coordinates(const Ansatz& ansatz, const LinearForm& form) {
  Vector out(ansatz.patterns.size());
  for (const auto& [t, c] : form) {
    bool found = false;
    for (std::size_t k = 0; k < ansatz.patterns.size() && !found; ++k) {
      if (ansatz.patterns[k] == t) {
        out[k] = c;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

std::string combination_string(const Vector& coefficients) {
  std::string out;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Scalar& c = coefficients[k];
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.real()) < 0;
    Scalar magnitude = negative ? -c : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (!magnitude.is_one()) out += (magnitude.is_real() ? magnitude.str() : "(" + magnitude.str() + ")") + "·";
    out += "a" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

ConstraintSystem derive_constraints(NogoCase c) { return derive_constraints(c, theory_rules(nogo_theory(c))); }

ConstraintSystem derive_constraints(NogoCase c, RuleSet rules) {
  const Ansatz ansatz = build_ansatz(c);
  const OperatorTemplate inner = delta_template(nogo_theory(c), 2);
  const std::size_t k = ansatz.patterns.size();
  std::map<FreeTerm, Vector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [t, coeff] : pattern_composition(ansatz, i, inner, rules)) {
      auto [it, inserted] = rows.try_emplace(t, Vector(k));
      it->second[i] += coeff;
    }
  }
  ConstraintSystem sys{c, rules, {}, {}};
  std::vector<Vector> matrix_rows;
  for (auto& [t, v] : rows) {
    bool zero = true;
    for (const auto& x : v) zero = zero && x.is_zero();
    if (zero) continue;
    matrix_rows.push_back(v);
    sys.rows.push_back({t, std::move(v)});
  }
  sys.matrix = matrix_rows.empty() ? ExactMatrix(0, k) : ExactMatrix::from_rows(matrix_rows);
  return sys;
}

LinearForm ansatz_composition(NogoCase c, const Vector& a, RuleSet rules) {
  const Ansatz ansatz = build_ansatz(c);
  if (a.size() != ansatz.patterns.size()) throw DimensionMismatch("wrong number of ansatz coefficients");
  LinearForm outer_form;
  for (std::size_t k = 0; k < a.size(); ++k) outer_form.add(ansatz.patterns[k], a[k]);
  OperatorTemplate outer{outer_form, std::string(kSymbol), ansatz.symbol_arity, ansatz.variables};
  return normalize(compose(outer, delta_template(nogo_theory(c), 2)).form, rules);
}

NogoReport solve(NogoCase c) { return solve(derive_constraints(c)); }

NogoReport solve(const ConstraintSystem& system) {
  NogoReport r{system, nullspace(system.matrix), 0, {}};
  r.dimension = r.nullspace.size();
  r.verdict = r.dimension == 0 ? "no δ³ exists"
                               : "δ³ candidates exist (solution space of dimension " + std::to_string(r.dimension) + ")";
  return r;
}

}  // namespace ternac
