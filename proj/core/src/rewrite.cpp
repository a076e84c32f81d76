#include "ternac/rewrite.hpp"

#include <array>
#include <stdexcept>

namespace ternac {

namespace {

FreeTerm x() { return FreeTerm::variable(); }
FreeTerm m(FreeTerm a, FreeTerm b, FreeTerm c) { return FreeTerm::m(std::move(a), std::move(b), std::move(c)); }
FreeTerm mu(FreeTerm a, FreeTerm b) { return FreeTerm::mu(std::move(a), std::move(b)); }

FreeTerm left3() { return m(m(x(), x(), x()), x(), x()); }
FreeTerm mid3() { return m(x(), m(x(), x(), x()), x()); }
FreeTerm right3() { return m(x(), x(), m(x(), x(), x())); }
FreeTerm left2() { return mu(mu(x(), x()), x()); }
FreeTerm right2() { return mu(x(), mu(x(), x())); }

constexpr std::array<std::pair<RuleSet, const char*>, 7> kNames{{
    {RuleSet::PartialTernary, "partial"},
    {RuleSet::WeakTernary, "weak"},
    {RuleSet::TotalTernary, "total"},
    {RuleSet::Alt1Ternary, "alt1"},
    {RuleSet::Alt2Ternary, "alt2"},
    {RuleSet::SkewBinary, "skew"},
    {RuleSet::AssocBinary, "assoc"},
}};

// Matches pattern node range against term starting at `pos`; appends the
// bound subterms in pattern-variable order.
bool match(const FreeTerm& pattern, std::size_t& ppos, const FreeTerm& term, std::size_t tpos,
           std::vector<FreeTerm>& bindings) {
  const Node& p = pattern.nodes()[ppos];
  if (p.kind == NodeKind::Variable) {
    bindings.push_back(term.subterm(tpos));
    ++ppos;
    return true;
  }
  const Node& t = term.nodes()[tpos];
  if (p.kind != t.kind || p.arity != t.arity || p.label != t.label) return false;
  ++ppos;
  for (std::size_t child : term.children(tpos))
    if (!match(pattern, ppos, term, child, bindings)) return false;
  return true;
}

}  // namespace

std::string rule_name(RuleSet rules) {
  for (const auto& [r, n] : kNames)
    if (r == rules) return n;
  throw std::logic_error("unhandled rule set");
}

RuleSet parse_rule(std::string_view name) {
  for (const auto& [r, n] : kNames)
    if (name == n) return r;
  throw std::invalid_argument("unknown rewrite rule '" + std::string(name) + "'");
}

std::vector<RewriteRule> rewrite_rules(RuleSet rules) {
  switch (rules) {
    case RuleSet::PartialTernary:
      return {{right3(), {{-1, mid3()}, {-1, left3()}}}};
    case RuleSet::WeakTernary:
      return {{left3(), {{1, right3()}}}};
    case RuleSet::TotalTernary:
      return {{left3(), {{1, right3()}}}, {mid3(), {{1, right3()}}}};
    case RuleSet::Alt1Ternary:
      return {{right3(), {{1, mid3()}, {-1, left3()}}}};
    case RuleSet::Alt2Ternary:
      return {{right3(), {{1, left3()}, {-1, mid3()}}}};
    case RuleSet::SkewBinary:
      return {{right2(), {{-1, left2()}}}};
    case RuleSet::AssocBinary:
      return {{left2(), {{1, right2()}}}};
  }
  throw std::logic_error("unhandled rule set");
}

std::optional<std::vector<std::pair<Scalar, FreeTerm>>> rewrite_once(const FreeTerm& term,
                                                                      const std::vector<RewriteRule>& rules) {
  for (std::size_t pos = 0; pos < term.size(); ++pos) {
    if (term.nodes()[pos].kind != NodeKind::Operation) continue;
    for (const auto& rule : rules) {
      std::vector<FreeTerm> bindings;
      std::size_t ppos = 0;
      if (!match(rule.lhs, ppos, term, pos, bindings)) continue;
      std::vector<std::pair<Scalar, FreeTerm>> out;
      for (const auto& [c, rhs] : rule.rhs) out.emplace_back(c, term.replaced(pos, rhs.instantiate(bindings)));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace ternac
