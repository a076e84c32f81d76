#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ternac/scalar.hpp"

namespace ternac {

inline constexpr std::string_view kTernaryOp = "m";
inline constexpr std::string_view kBinaryOp = "mu";

enum class NodeKind : std::uint8_t { Variable, Operation, Symbol, Tensor };

struct Node {
  NodeKind kind = NodeKind::Variable;
  std::uint8_t arity = 0;
  std::string label;

  friend auto operator<=>(const Node&, const Node&) = default;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Planar tree over formal variables, stored in prefix order. Leaves are
/// anonymous variables; the k-th leaf from the left is x_k, so every term is
/// automatically multilinear with variables in order.
class FreeTerm {
 public:
  FreeTerm() = default;

  static FreeTerm variable();
  static FreeTerm operation(std::string_view label, std::vector<FreeTerm> children);
  static FreeTerm symbol(std::string_view label, std::vector<FreeTerm> children);
  static FreeTerm tensor(FreeTerm left, FreeTerm right);
  /// Ternary operation m(a,b,c) / binary operation mu(a,b).
  static FreeTerm m(FreeTerm a, FreeTerm b, FreeTerm c);
  static FreeTerm mu(FreeTerm a, FreeTerm b);
  /// A symbol applied to `arity` consecutive variables.
  static FreeTerm symbol_on_variables(std::string_view label, std::size_t arity);

  /// Parses "m(x1, f(x2, x3, x4), x5)"; "m" and "mu" are operations, any
  /// other name is a symbol, "(a ⊗ b)" is a tensor. Variables must read
  /// x1, x2, ... from left to right. Throws std::invalid_argument.
  static FreeTerm parse(std::string_view text);

  std::span<const Node> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  std::size_t variable_count() const;

  /// One past the last node of the subterm rooted at `pos`.
  std::size_t subterm_end(std::size_t pos) const;
  FreeTerm subterm(std::size_t pos) const;
  /// Start positions of the children of the node at `pos`.
  std::vector<std::size_t> children(std::size_t pos) const;
  /// Replace the subterm rooted at `pos`.
  FreeTerm replaced(std::size_t pos, const FreeTerm& replacement) const;
  /// Replace the k-th variable by bindings[k].
  FreeTerm instantiate(std::span<const FreeTerm> bindings) const;

  /// Number of nodes with the given kind and label.
  std::size_t count(NodeKind kind, std::string_view label) const;

  std::string str() const;

  friend auto operator<=>(const FreeTerm&, const FreeTerm&) = default;
  friend bool operator==(const FreeTerm&, const FreeTerm&) = default;

 private:
  explicit FreeTerm(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}
  std::vector<Node> nodes_;
};

namespace detail {
template <class C>
bool coefficient_is_zero(const C& c) {
  return c.is_zero();
}
}  // namespace detail

/// Finite linear combination of distinct canonical terms; zero coefficients
/// are never stored. Iteration follows the canonical term order.
template <class C>
class BasicLinearForm {
 public:
  using Map = std::map<FreeTerm, C>;

  BasicLinearForm() = default;
  explicit BasicLinearForm(FreeTerm t, C c = C(1)) { add(std::move(t), std::move(c)); }

  void add(const FreeTerm& t, const C& c) {
    if (detail::coefficient_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (inserted) return;
    it->second = it->second + c;
    if (detail::coefficient_is_zero(it->second)) terms_.erase(it);
  }
  void add(const BasicLinearForm& other, const C& factor) {
    for (const auto& [t, c] : other.terms_) add(t, c * factor);
  }

  BasicLinearForm& operator+=(const BasicLinearForm& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
  }
  BasicLinearForm& operator-=(const BasicLinearForm& other) {
    for (const auto& [t, c] : other.terms_) add(t, -c);
    return *this;
  }
  BasicLinearForm& operator*=(const C& factor) {
    if (detail::coefficient_is_zero(factor)) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c = c * factor;
    return *this;
  }
  friend BasicLinearForm operator+(BasicLinearForm a, const BasicLinearForm& b) { return a += b; }
  friend BasicLinearForm operator-(BasicLinearForm a, const BasicLinearForm& b) { return a -= b; }
  friend BasicLinearForm operator*(BasicLinearForm a, const C& c) { return a *= c; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  C coefficient(const FreeTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// (term, coefficient) pairs in canonical order.
  std::vector<std::pair<FreeTerm, C>> collect() const { return {terms_.begin(), terms_.end()}; }

  friend bool operator==(const BasicLinearForm&, const BasicLinearForm&) = default;

 private:
  Map terms_;
};

using LinearForm = BasicLinearForm<Scalar>;

/// "m(x1, x2, x3) - 2·f(x1, x2, x3)"; "0" when empty.
std::string to_string(const LinearForm& form);

/// Replace every node labelled `symbol` (a Symbol node whose arity equals
/// the variable count of the inner terms) by the inner form, expanding
/// products of coefficients. Throws std::invalid_argument on arity mismatch.
template <class C>
BasicLinearForm<C> substitute(const BasicLinearForm<C>& outer, std::string_view symbol,
                              const BasicLinearForm<C>& inner) {
  BasicLinearForm<C> result;
  std::vector<std::pair<FreeTerm, C>> pending(outer.begin(), outer.end());
  while (!pending.empty()) {
    auto [term, coeff] = std::move(pending.back());
    pending.pop_back();
    std::size_t pos = term.size();
    auto nodes = term.nodes();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k].kind == NodeKind::Symbol && nodes[k].label == symbol) {
        pos = k;
        break;
      }
    }
    if (pos == term.size()) {
      result.add(term, coeff);
      continue;
    }
    std::vector<FreeTerm> bindings;
    for (std::size_t child : term.children(pos)) bindings.push_back(term.subterm(child));
    for (const auto& [t, c] : inner) {
      if (t.variable_count() != bindings.size())
        throw std::invalid_argument("symbol '" + std::string(symbol) + "' has arity " +
                                    std::to_string(bindings.size()) + " but the substituted form has " +
                                    std::to_string(t.variable_count()) + " variables");
      pending.emplace_back(term.replaced(pos, t.instantiate(bindings)), coeff * c);
    }
  }
  return result;
}

/// A linear operator written symbolically: `form` is the value of the
/// operator on a cochain named `symbol` taking `symbol_arity` inputs,
/// expressed over `variables` formal variables.
struct OperatorTemplate {
  LinearForm form;
  std::string symbol;
  std::size_t symbol_arity = 0;
  std::size_t variables = 0;
};

/// outer(inner(symbol)): substitutes inner.form for outer.symbol.
OperatorTemplate compose(const OperatorTemplate& outer, const OperatorTemplate& inner);

}  // namespace ternac
