#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ternac/algebra.hpp"

namespace ternac {

struct ExampleInfo {
  std::string name;
  std::string description;
};

/// Named algebras shipped with the library. Zero algebras are written
/// "zero:N:ARITY" or "zero(N,ARITY)" and are not listed.
std::vector<ExampleInfo> builtin_examples();

/// Throws std::invalid_argument for unknown names.
Algebra builtin_example(std::string_view name);

/// 2-dim, totally associative, eight nonzero products.
Algebra totally_assoc_2d();
/// 2-dim, m(e1,e1,e1) = e2 only.
Algebra partially_assoc_2d();
/// R^4 bracket, C^l_{ijk} = epsilon_{ijkl}, so [e1,e2,e3] = e4.
Algebra cross4();
Algebra zero_algebra(std::size_t dim, int arity);

}  // namespace ternac
