#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternac/algebra.hpp"

namespace ternac {

enum class IdentityKind {
  TotallyAssociative,
  WeakTotallyAssociative,
  PartiallyAssociative,
  AlternateFirstKind,
  AlternateSecondKind,
  Symmetric,
  SkewSymmetric,
  Commutative,
  TernaryLieS5,
  TernaryLieS3,
  NambuFundamental,
  LieTriple,
  BinaryAssociative,
  BinarySkewAssociative,
};

std::vector<IdentityKind> all_identity_kinds();

/// Short name used by the CLI ("total", "partial", "lie-s5", ...).
std::string identity_name(IdentityKind kind);
/// Accepts the short name or the enumerator spelling; throws std::invalid_argument.
IdentityKind parse_identity(std::string_view name);
/// 2 or 3.
int identity_arity(IdentityKind kind);

struct Counterexample {
  std::vector<std::size_t> tuple;  // 0-based basis indices
  Vector defect;                   // nonzero
  std::string clause;              // which equation of the identity failed
};

struct IdentityReport {
  IdentityKind kind;
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

/// Exhaustive check over basis tuples in lexicographic order; stops at the
/// first failure. Throws std::invalid_argument on arity mismatch.
IdentityReport check_identity(const Algebra& alg, IdentityKind kind);

}  // namespace ternac
