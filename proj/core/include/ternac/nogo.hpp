#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternac/coboundary.hpp"
#include "ternac/freeterm.hpp"
#include "ternac/matrix.hpp"
#include "ternac/rewrite.hpp"

namespace ternac {

/// TernaryWeak is the control case: the same ansatz against the weak
/// identity, where a third coboundary does exist.
enum class NogoCase { TernaryPartial, TernaryAlt1, TernaryAlt2, BinarySkew, TernaryWeak };

std::string nogo_case_name(NogoCase c);  // "ternary-partial", ..., "binary-skew", "ternary-weak"
NogoCase parse_nogo_case(std::string_view name);
std::vector<NogoCase> all_nogo_cases();
Theory nogo_theory(NogoCase c);

/// Candidate third coboundary: sum of a_k * patterns[k] applied to a cochain
/// named "f" (5 inputs ternary, 3 inputs binary).
struct Ansatz {
  NogoCase which;
  std::vector<FreeTerm> patterns;
  std::size_t symbol_arity = 0;
  std::size_t variables = 0;
};

Ansatz build_ansatz(NogoCase c);

/// Coordinates of a form in the ansatz patterns, or nullopt when it uses
/// terms outside the ansatz.
std::optional<Vector> ansatz_coordinates(const Ansatz& ansatz, const LinearForm& form);

struct ConstraintRow {
  FreeTerm term;
  Vector coefficients;  // over a_1..a_k
};

struct ConstraintSystem {
  NogoCase which;
  RuleSet rules;
  std::vector<ConstraintRow> rows;  // canonical term order
  ExactMatrix matrix;               // rows.size() x k
};

/// "a7 - a8", "a1 + 2·a3".
std::string combination_string(const Vector& coefficients);

/// Composes each pattern with the case's second coboundary, normalizes
/// with `rules` (default: the case's own identity) and collects.
ConstraintSystem derive_constraints(NogoCase c);
ConstraintSystem derive_constraints(NogoCase c, RuleSet rules);

/// Normal form of (sum a_k pattern_k) ∘ delta^2 for given coefficients.
LinearForm ansatz_composition(NogoCase c, const Vector& a, RuleSet rules);

struct NogoReport {
  ConstraintSystem system;
  std::vector<Vector> nullspace;
  std::size_t dimension = 0;
  std::string verdict;
};

NogoReport solve(NogoCase c);
NogoReport solve(const ConstraintSystem& system);

}  // namespace ternac
