#include "ternac/freeterm.hpp"

#include <cctype>

namespace ternac {

namespace {

std::vector<Node> join(Node root, std::vector<FreeTerm>& children) {
  std::vector<Node> nodes{std::move(root)};
  for (auto& c : children) {
    auto n = c.nodes();
    nodes.insert(nodes.end(), n.begin(), n.end());
  }
  return nodes;
}

}  // namespace

FreeTerm FreeTerm::variable() { return FreeTerm(std::vector<Node>{Node{NodeKind::Variable, 0, {}}}); }

FreeTerm FreeTerm::operation(std::string_view label, std::vector<FreeTerm> children) {
  return FreeTerm(join(Node{NodeKind::Operation, static_cast<std::uint8_t>(children.size()), std::string(label)},
                       children));
}

FreeTerm FreeTerm::symbol(std::string_view label, std::vector<FreeTerm> children) {
  return FreeTerm(
      join(Node{NodeKind::Symbol, static_cast<std::uint8_t>(children.size()), std::string(label)}, children));
}

FreeTerm FreeTerm::tensor(FreeTerm left, FreeTerm right) {
  std::vector<FreeTerm> children{std::move(left), std::move(right)};
  return FreeTerm(join(Node{NodeKind::Tensor, 2, {}}, children));
}

FreeTerm FreeTerm::m(FreeTerm a, FreeTerm b, FreeTerm c) {
  return operation(kTernaryOp, {std::move(a), std::move(b), std::move(c)});
}

FreeTerm FreeTerm::mu(FreeTerm a, FreeTerm b) { return operation(kBinaryOp, {std::move(a), std::move(b)}); }

FreeTerm FreeTerm::symbol_on_variables(std::string_view label, std::size_t arity) {
  return symbol(label, std::vector<FreeTerm>(arity, variable()));
}

std::size_t FreeTerm::variable_count() const {
  std::size_t k = 0;
  for (const auto& n : nodes_)
    if (n.kind == NodeKind::Variable) ++k;
  return k;
}

std::size_t FreeTerm::subterm_end(std::size_t pos) const {
  std::size_t open = 1;
  while (open > 0) {
    if (pos >= nodes_.size()) throw std::logic_error("malformed term");
    open += nodes_[pos].arity;
    --open;
    ++pos;
  }
  return pos;
}

FreeTerm FreeTerm::subterm(std::size_t pos) const {
  return FreeTerm(std::vector<Node>(nodes_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    nodes_.begin() + static_cast<std::ptrdiff_t>(subterm_end(pos))));
}

std::vector<std::size_t> FreeTerm::children(std::size_t pos) const {
  std::vector<std::size_t> out;
  std::size_t child = pos + 1;
  for (std::size_t k = 0; k < nodes_[pos].arity; ++k) {
    out.push_back(child);
    child = subterm_end(child);
  }
  return out;
}

FreeTerm FreeTerm::replaced(std::size_t pos, const FreeTerm& replacement) const {
  std::vector<Node> nodes(nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(pos));
  nodes.insert(nodes.end(), replacement.nodes_.begin(), replacement.nodes_.end());
  nodes.insert(nodes.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(subterm_end(pos)), nodes_.end());
  return FreeTerm(std::move(nodes));
}

FreeTerm FreeTerm::instantiate(std::span<const FreeTerm> bindings) const {
  std::vector<Node> nodes;
  std::size_t k = 0;
  for (const auto& n : nodes_) {
    if (n.kind != NodeKind::Variable) {
      nodes.push_back(n);
      continue;
    }
    if (k >= bindings.size()) throw std::invalid_argument("not enough bindings for term variables");
    const auto& b = bindings[k++].nodes_;
    nodes.insert(nodes.end(), b.begin(), b.end());
  }
  if (k != bindings.size()) throw std::invalid_argument("too many bindings for term variables");
  return FreeTerm(std::move(nodes));
}

std::size_t FreeTerm::count(NodeKind kind, std::string_view label) const {
  std::size_t k = 0;
  for (const auto& n : nodes_)
    if (n.kind == kind && n.label == label) ++k;
  return k;
}

namespace {

void print(const std::vector<Node>& nodes, std::size_t& pos, std::size_t& var, std::string& out) {
  const Node& n = nodes[pos++];
  switch (n.kind) {
    case NodeKind::Variable:
      out += "x" + std::to_string(++var);
      return;
    case NodeKind::Tensor:
      out += "(";
      print(nodes, pos, var, out);
      out += " ⊗ ";
      print(nodes, pos, var, out);
      out += ")";
      return;
    case NodeKind::Operation:
    case NodeKind::Symbol:
      out += n.label + "(";
      for (std::size_t k = 0; k < n.arity; ++k) {
        if (k > 0) out += ", ";
        print(nodes, pos, var, out);
      }
      out += ")";
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FreeTerm parse() {
    FreeTerm t = term();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("term parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  FreeTerm term() {
    skip();
    if (accept("(")) {
      FreeTerm left = term();
      if (!accept("⊗")) fail("expected '⊗'");
      FreeTerm right = term();
      expect(")");
      return FreeTerm::tensor(std::move(left), std::move(right));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a name");
    if (!accept("(")) {
      if (name != "x" + std::to_string(++vars_)) fail("expected variable x" + std::to_string(vars_));
      return FreeTerm::variable();
    }
    std::vector<FreeTerm> children;
    do {
      children.push_back(term());
    } while (accept(","));
    expect(")");
    if (name == kTernaryOp || name == kBinaryOp) return FreeTerm::operation(name, std::move(children));
    return FreeTerm::symbol(name, std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t vars_ = 0;
};

}  // namespace

FreeTerm FreeTerm::parse(std::string_view text) { return Parser(text).parse(); }

std::string FreeTerm::str() const {
  std::string out;
  std::size_t pos = 0;
  std::size_t var = 0;
  if (!nodes_.empty()) print(nodes_, pos, var, out);
  return out;
}

std::string to_string(const LinearForm& form) {
  if (form.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : form) {
    bool negative = c.is_real() && sgn(c.real()) < 0;
    Scalar magnitude = negative ? -c : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    if (!magnitude.is_one()) {
      out += magnitude.is_real() ? magnitude.str() : "(" + magnitude.str() + ")";
      out += "·";
    }
    out += t.str();
  }
  return out;
}

OperatorTemplate compose(const OperatorTemplate& outer, const OperatorTemplate& inner) {
  if (outer.symbol_arity != inner.variables)
    throw std::invalid_argument("cannot compose: outer operator expects a cochain with " +
                                std::to_string(outer.symbol_arity) + " inputs, inner operator produces " +
                                std::to_string(inner.variables));
  LinearForm outer_form = outer.form;
  std::string symbol = outer.symbol;
  if (symbol == inner.symbol) {
    // Rename so that the substituted terms are not substituted again.
    static constexpr std::string_view kTemp = "\x01";
    LinearForm renamed;
    FreeTerm temp_symbol = FreeTerm::symbol_on_variables(kTemp, outer.symbol_arity);
    renamed = substitute(outer_form, symbol, LinearForm(temp_symbol));
    outer_form = std::move(renamed);
    symbol = kTemp;
  }
  return {substitute(outer_form, symbol, inner.form), inner.symbol, inner.symbol_arity, outer.variables};
}

}  // namespace ternac
