#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ternac/freeterm.hpp"

namespace ternac {

/// Oriented forms of the defining identities.
enum class RuleSet {
  PartialTernary,  // m(a,b,m(c,d,e)) -> -m(a,m(b,c,d),e) - m(m(a,b,c),d,e)
  WeakTernary,     // m(m(a,b,c),d,e) -> m(a,b,m(c,d,e))
  TotalTernary,    // m(m(a,b,c),d,e), m(a,m(b,c,d),e) -> m(a,b,m(c,d,e))
  Alt1Ternary,     // m(a,b,m(c,d,e)) -> m(a,m(b,c,d),e) - m(m(a,b,c),d,e)
  Alt2Ternary,     // m(a,b,m(c,d,e)) -> m(m(a,b,c),d,e) - m(a,m(b,c,d),e)
  SkewBinary,      // mu(a,mu(b,c)) -> -mu(mu(a,b),c)
  AssocBinary,     // mu(mu(a,b),c) -> mu(a,mu(b,c))
};

std::string rule_name(RuleSet rules);
RuleSet parse_rule(std::string_view name);

struct RewriteRule {
  FreeTerm lhs;  // pattern; its variables match arbitrary subterms
  std::vector<std::pair<Scalar, FreeTerm>> rhs;
};

std::vector<RewriteRule> rewrite_rules(RuleSet rules);

/// Rewrites the first redex (pre-order) of `term`, or returns nullopt when
/// the term is in normal form.
std::optional<std::vector<std::pair<Scalar, FreeTerm>>> rewrite_once(const FreeTerm& term,
                                                                      const std::vector<RewriteRule>& rules);

class RewriteLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies the rules until no redex remains. Linear in the input.
template <class C>
BasicLinearForm<C> normalize(const BasicLinearForm<C>& form, RuleSet rule_set, std::size_t max_steps = 1'000'000) {
  const auto rules = rewrite_rules(rule_set);
  BasicLinearForm<C> done;
  BasicLinearForm<C> pending = form;
  std::size_t steps = 0;
  while (!pending.empty()) {
    BasicLinearForm<C> next;
    for (const auto& [term, coeff] : pending) {
      auto rewritten = rewrite_once(term, rules);
      if (!rewritten) {
        done.add(term, coeff);
        continue;
      }
      if (++steps > max_steps) throw RewriteLimitExceeded("rewriting did not terminate within the step limit");
      for (const auto& [s, t] : *rewritten) next.add(t, coeff * C(s));
    }
    pending = std::move(next);
  }
  return done;
}

}  // namespace ternac
