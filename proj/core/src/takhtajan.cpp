#include "ternac/takhtajan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ternac {

namespace {

Polynomial alpha() { return Polynomial::variable(0, 2); }
Polynomial lambda() { return Polynomial::variable(1, 2); }

FreeTerm pair_of_variables() { return FreeTerm::tensor(FreeTerm::variable(), FreeTerm::variable()); }

// The induced product on formal tensors a⊗b, extended bilinearly.
PolyForm mu(const PolyForm& x, const PolyForm& y) {
  PolyForm out;
  for (const auto& [s, cs] : x) {
    const auto sc = s.children(0);
    const FreeTerm a = s.subterm(sc[0]), b = s.subterm(sc[1]);
    for (const auto& [t, ct] : y) {
      const auto tc = t.children(0);
      const FreeTerm c = t.subterm(tc[0]), d = t.subterm(tc[1]);
      const Polynomial coeff = cs * ct;
      out.add(FreeTerm::tensor(FreeTerm::m(a, b, c), d), coeff);
      out.add(FreeTerm::tensor(a, FreeTerm::m(b, c, d)), coeff * alpha());
    }
  }
  return out;
}

std::vector<Polynomial> coefficients(const PolyForm& form) {
  std::vector<Polynomial> out;
  for (const auto& [t, c] : form) out.push_back(c);
  return out;
}

PolyForm normalized(const PolyForm& form, RuleSet rules) { return normalize(form, rules); }

std::vector<std::pair<Scalar, Scalar>> alpha_lambda_of(const std::vector<std::vector<Scalar>>& points) {
  std::vector<std::pair<Scalar, Scalar>> out;
  for (const auto& p : points) {
    std::pair<Scalar, Scalar> al{p[0], p[1]};
    if (std::find(out.begin(), out.end(), al) == out.end()) out.push_back(al);
  }
  return out;
}

AssocReading rewrite_reading(std::string name, const PolyForm& expansion, RuleSet rules, Field field) {
  AssocReading r{std::move(name), kAlphaLambda, coefficients(normalized(expansion, rules)), {}};
  r.solutions = solve_system(r.constraints, 2, field);
  return r;
}

AssocReading proportional_reading(const SectorSplit& split, Field field) {
  constexpr std::size_t n = 5;
  AssocReading r{"proportional", {"α", "λ", "c2", "c3", "t"}, {}, {}};
  const std::array<Polynomial, 3> c{Polynomial(1), Polynomial::variable(2, n), Polynomial::variable(3, n)};
  for (const auto& s : split.sectors) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Polynomial minor = s.nestings[i] * c[j] - s.nestings[j] * c[i];
        if (!minor.is_zero()) r.constraints.push_back(minor.widened(n));
      }
  }
  for (const auto& [t, coeff] : split.unnested) r.constraints.push_back(coeff.widened(n));
  // c2 c3 λ != 0 via an auxiliary variable t.
  r.constraints.push_back(Polynomial::variable(4, n) * c[1] * c[2] * Polynomial::variable(1, n) - Polynomial(1));
  r.solutions = solve_system(r.constraints, n, field);
  return r;
}

std::string match_identity(const Vector& c) {
  const std::vector<std::pair<std::string, Vector>> known{
      {"partial", {Scalar(1), Scalar(1), Scalar(1)}},
      {"alt1", {Scalar(1), Scalar(-1), Scalar(1)}},
      {"alt2", {Scalar(1), Scalar(-1), Scalar(-1)}},
  };
  for (const auto& [name, v] : known)
    if (v == c) return name;
  return "none";
}

}  // namespace

Algebra induced_binary(const Algebra& alg, const Scalar& alpha_value, InducedVariant variant) {
  if (!alg.is_ternary()) throw std::invalid_argument("the induced product needs a ternary algebra");
  const std::size_t n = alg.dim();
  const Field field = alpha_value.is_real() ? alg.field() : Field::Gaussian;
  Algebra w = Algebra::binary(n * n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t x = i * n + j, y = k * n + l;
          const std::array<std::size_t, 2> in{x, y};
          std::vector<Scalar> out(n * n);
          for (std::size_t s = 0; s < n; ++s) {
            const std::array<std::size_t, 3> first{i, j, k};
            out[s * n + l] += alg.constant(first, s);
            if (variant == InducedVariant::Standard) {
              const std::array<std::size_t, 3> second{j, k, l};
              out[i * n + s] += alpha_value * alg.constant(second, s);
            } else {
              const std::array<std::size_t, 3> second{i, j, l};
              out[k * n + s] += alpha_value * alg.constant(second, s);
            }
          }
          for (std::size_t s = 0; s < n * n; ++s)
            if (!out[s].is_zero()) w.set_constant(in, s, out[s]);
        }
  return w;
}

Cochain lift_cochain(const Cochain& phi, const Scalar& alpha_value) {
  if (phi.family_arity() != 3) throw std::invalid_argument("only ternary cochains can be lifted");
  const std::size_t n = phi.dim(), q = phi.degree();
  Cochain out(2, q, n * n);
  std::vector<std::size_t> base(2 * q + 2);
  for (std::size_t flat = 0; flat < out.input_count(); ++flat) {
    const auto w = out.unflatten(flat);
    for (std::size_t k = 0; k < w.size(); ++k) {
      base[2 * k] = w[k] / n;
      base[2 * k + 1] = w[k] % n;
    }
    const std::span<const std::size_t> all(base);
    const auto head = phi.value(phi.flat_input(all.first(2 * q + 1)));
    const auto tail = phi.value(phi.flat_input(all.subspan(1)));
    for (std::size_t s = 0; s < n; ++s) {
      out.at(flat, s * n + base.back()) += head[s];
      if (!alpha_value.is_zero()) out.at(flat, base.front() * n + s) += alpha_value * tail[s];
    }
  }
  return out;
}

std::string assoc_type_name(AssocType t) { return t == AssocType::Total ? "total" : "partial"; }

AssocType parse_assoc_type(std::string_view name) {
  if (name == "total") return AssocType::Total;
  if (name == "partial") return AssocType::Partial;
  throw std::invalid_argument("unknown associativity type '" + std::string(name) + "'");
}

PolyForm associator_expansion() {
  const PolyForm x(pair_of_variables(), Polynomial(1));
  PolyForm out = mu(mu(x, x), x);
  out.add(mu(x, mu(x, x)), lambda());
  return out;
}

SectorSplit split_sectors(const PolyForm& expansion) {
  std::map<FreeTerm, std::array<Polynomial, 3>> groups;
  SectorSplit split;
  for (const auto& [term, coeff] : expansion) {
    const auto nodes = term.nodes();
    bool nested = false;
    for (std::size_t pos = 0; pos < nodes.size() && !nested; ++pos) {
      if (nodes[pos].kind != NodeKind::Operation) continue;
      const auto kids = term.children(pos);
      for (std::size_t k = 0; k < kids.size(); ++k) {
        if (nodes[kids[k]].kind != NodeKind::Operation) continue;
        const FreeTerm context = term.replaced(pos, FreeTerm::symbol_on_variables("N", 5));
        groups[context][k] += coeff;
        nested = true;
        break;
      }
    }
    if (!nested) split.unnested.emplace_back(term, coeff);
  }
  for (auto& [context, v] : groups) split.sectors.push_back({context, v});
  return split;
}

AssocTypeReport assoc_type_analysis(AssocType type, Field field) {
  AssocTypeReport r{type, field, associator_expansion(), {}, {}, std::nullopt, {}, {}, {}, false};
  r.split = split_sectors(r.expansion);
  if (type == AssocType::Total) {
    r.primary = rewrite_reading("rewrite", r.expansion, RuleSet::TotalTernary, field);
    r.alpha_lambda = alpha_lambda_of(r.primary.solutions);
    r.construction_possible = !r.alpha_lambda.empty();
    return r;
  }
  r.primary = proportional_reading(r.split, field);
  r.strict = rewrite_reading("strict", r.expansion, RuleSet::PartialTernary, field);
  r.alpha_lambda = alpha_lambda_of(r.primary.solutions);
  for (const auto& p : r.primary.solutions) {
    Vector c{Scalar(1), p[2], p[3]};
    if (std::find(r.required_identities.begin(), r.required_identities.end(), c) != r.required_identities.end())
      continue;
    r.identity_matches.push_back(match_identity(c));
    r.required_identities.push_back(std::move(c));
  }
  r.construction_possible = std::find(r.identity_matches.begin(), r.identity_matches.end(), "partial") !=
                            r.identity_matches.end();
  return r;
}

std::string recovery_status_name(RecoveryStatus s) {
  switch (s) {
    case RecoveryStatus::Commutes: return "commutes";
    case RecoveryStatus::CommutesUpToSign: return "commutes up to sign";
    case RecoveryStatus::Fails: return "fails";
  }
  throw std::logic_error("unhandled recovery status");
}

std::vector<RecoveryResult> recovery_check(const Algebra& alg, std::size_t pmax, Check check) {
  if (!alg.is_ternary()) throw std::invalid_argument("recovery check needs a ternary algebra");
  if (check == Check::Verify) {
    const auto rep = check_identity(alg, IdentityKind::TotallyAssociative);
    if (!rep.holds) throw PreconditionError("recovery check needs a totally associative algebra");
  }
  const Algebra w = induced_binary(alg, Scalar(0));
  const std::size_t n = alg.dim();
  std::vector<RecoveryResult> out;
  for (std::size_t p = 1; p <= pmax; ++p) {
    const std::size_t size = Cochain(3, p - 1, n).size();
    for (WeakVariant v : all_weak_variants()) {
      bool same = true, opposite = true;
      for (std::size_t k = 0; k < size && (same || opposite); ++k) {
        Vector e(size);
        e[k] = Scalar(1);
        const Cochain phi = Cochain::from_coordinates(3, p - 1, n, e);
        const Cochain lhs = hochschild(w, lift_cochain(phi, Scalar(0)), Check::Assume);
        const Cochain rhs = lift_cochain(delta_weak(alg, phi, v, Check::Assume), Scalar(0));
        same = same && lhs == rhs;
        opposite = opposite && lhs == rhs * Scalar(-1);
      }
      const RecoveryStatus status =
          same ? RecoveryStatus::Commutes : (opposite ? RecoveryStatus::CommutesUpToSign : RecoveryStatus::Fails);
      out.push_back({p, v, status});
    }
  }
  return out;
}

}  // namespace ternac
