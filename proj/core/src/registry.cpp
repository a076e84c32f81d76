#include "ternac/registry.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace ternac {

namespace {

void set3(Algebra& a, std::size_t i, std::size_t j, std::size_t k, std::size_t s, Scalar c) {
  std::array<std::size_t, 3> in{i - 1, j - 1, k - 1};
  a.set_constant(in, s - 1, std::move(c));
}

void set2(Algebra& a, std::size_t i, std::size_t j, std::size_t s, Scalar c) {
  std::array<std::size_t, 2> in{i - 1, j - 1};
  a.set_constant(in, s - 1, std::move(c));
}

int levi_civita(const std::array<std::size_t, 4>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (p[a] == p[b]) return 0;
      if (p[a] > p[b]) sign = -sign;
    }
  return sign;
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed zero algebra name '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Algebra totally_assoc_2d() {
  Algebra a = Algebra::ternary(2);
  set3(a, 1, 1, 1, 1, 1);
  set3(a, 1, 1, 2, 2, 1);
  set3(a, 1, 2, 2, 1, 1);
  set3(a, 1, 2, 2, 2, 1);
  set3(a, 2, 1, 1, 2, 1);
  set3(a, 2, 2, 1, 1, 1);
  set3(a, 2, 2, 1, 2, 1);
  set3(a, 2, 2, 2, 1, 1);
  set3(a, 2, 2, 2, 2, 2);
  set3(a, 1, 2, 1, 2, 1);
  set3(a, 2, 1, 2, 1, 1);
  set3(a, 2, 1, 2, 2, 1);
  return a;
}

Algebra partially_assoc_2d() {
  Algebra a = Algebra::ternary(2);
  set3(a, 1, 1, 1, 2, 1);
  return a;
}

Algebra cross4() {
  Algebra a = Algebra::ternary(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          int e = levi_civita({i, j, k, l});
          if (e != 0) set3(a, i + 1, j + 1, k + 1, l + 1, e);
        }
  return a;
}

Algebra zero_algebra(std::size_t dim, int arity) { return Algebra(dim, arity); }

std::vector<ExampleInfo> builtin_examples() {
  return {
      {"totally-assoc-2d", "2-dim totally associative ternary algebra (8 nonzero products)"},
      {"partially-assoc-2d", "2-dim partially associative ternary algebra, m(e1,e1,e1) = e2"},
      {"cross4", "ternary Nambu-Lie bracket on R^4, [e1,e2,e3] = e4"},
      {"skew-nil-2d", "2-dim skew-associative binary algebra, mu(e1,e1) = e2"},
      {"assoc-unit-1d", "1-dim associative binary algebra, mu(e1,e1) = e1"},
  };
}

Algebra builtin_example(std::string_view name) {
  if (name == "totally-assoc-2d") return totally_assoc_2d();
  if (name == "partially-assoc-2d") return partially_assoc_2d();
  if (name == "cross4") return cross4();
  if (name == "skew-nil-2d") {
    Algebra a = Algebra::binary(2);
    set2(a, 1, 1, 2, 1);
    return a;
  }
  if (name == "assoc-unit-1d") {
    Algebra a = Algebra::binary(1);
    set2(a, 1, 1, 1, 1);
    return a;
  }
  std::string_view args;
  if (name.starts_with("zero:")) {
    args = name.substr(5);
    auto colon = args.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("zero algebra needs zero:N:ARITY");
    std::size_t n = parse_count(args.substr(0, colon), name);
    std::size_t arity = parse_count(args.substr(colon + 1), name);
    return zero_algebra(n, static_cast<int>(arity));
  }
  if (name.starts_with("zero(") && name.ends_with(")")) {
    args = name.substr(5, name.size() - 6);
    auto comma = args.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("zero algebra needs zero(N,ARITY)");
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return s;
    };
    std::string_view arity_text = trim(args.substr(comma + 1));
    std::size_t n = parse_count(trim(args.substr(0, comma)), name);
    int arity = 0;
    if (arity_text == "ternary") arity = 3;
    else if (arity_text == "binary") arity = 2;
    else arity = static_cast<int>(parse_count(arity_text, name));
    return zero_algebra(n, arity);
  }
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

}  // namespace ternac
