#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ternac/algebra.hpp"
#include "ternac/coboundary.hpp"
#include "ternac/cochain.hpp"
#include "ternac/freeterm.hpp"
#include "ternac/polynomial.hpp"

namespace ternac {

/// Binary product on W = V ⊗ V (basis e_i ⊗ e_j at index i*n + j).
///   Standard: mu(x1⊗x2, y1⊗y2) = m(x1,x2,y1)⊗y2 + alpha x1⊗m(x2,y1,y2)
///   Nambu:    mu(x1⊗x2, y1⊗y2) = m(x1,x2,y1)⊗y2 + alpha y1⊗m(x1,x2,y2)
enum class InducedVariant { Standard, Nambu };

Algebra induced_binary(const Algebra& alg, const Scalar& alpha, InducedVariant variant = InducedVariant::Standard);

/// Lifts a ternary degree-q cochain (2q+1 inputs) to a binary degree-q
/// cochain on W (q+1 inputs in W):
///   phi(y1..y_{2q+1}) ⊗ y_{2q+2} + alpha y1 ⊗ phi(y2..y_{2q+2}).
Cochain lift_cochain(const Cochain& phi, const Scalar& alpha);

// ---- which associativity type can the induced product have -----------------

enum class AssocType { Total, Partial };

std::string assoc_type_name(AssocType t);  // "total", "partial"
AssocType parse_assoc_type(std::string_view name);

using PolyForm = BasicLinearForm<Polynomial>;

/// Polynomial variable names used by the analysis.
inline const std::vector<std::string> kAlphaLambda{"α", "λ"};

/// mu(mu(X,Y),Z) + λ mu(X,mu(Y,Z)) for X = x1⊗x2, Y = y1⊗y2, Z = z1⊗z2,
/// with coefficients in (α, λ), before any identity is applied.
PolyForm associator_expansion();

/// Terms of the expansion that share everything except the shape of one
/// nested ternary product; `nestings` holds the coefficients of the left,
/// middle and right nesting in that context.
struct Sector {
  FreeTerm context;  // nested product replaced by a 5-ary symbol "N"
  std::array<Polynomial, 3> nestings;
};

struct SectorSplit {
  std::vector<Sector> sectors;
  std::vector<std::pair<FreeTerm, Polynomial>> unnested;  // terms without a nested product
};

SectorSplit split_sectors(const PolyForm& expansion);

/// One way of turning the expansion into polynomial conditions.
struct AssocReading {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Polynomial> constraints;
  std::vector<std::vector<Scalar>> solutions;  // points in `variables` order
};

struct AssocTypeReport {
  AssocType type;
  Field field;
  PolyForm expansion;
  SectorSplit split;
  /// Total: coefficients after rewriting with the total identity.
  /// Partial: every sector proportional to some identity
  ///   m(m(..),..) + c2 m(.,m(..),.) + c3 m(.,.,m(..)) = 0 with c2 c3 λ != 0.
  AssocReading primary;
  /// Partial only: coefficients after rewriting with the partial identity.
  std::optional<AssocReading> strict;
  std::vector<std::pair<Scalar, Scalar>> alpha_lambda;  // from the primary reading
  std::vector<Vector> required_identities;              // Partial: (1, c2, c3) per solution
  std::vector<std::string> identity_matches;            // known identity equal to it, or "none"
  bool construction_possible = false;
};

AssocTypeReport assoc_type_analysis(AssocType type, Field field);

// ---- recovery of the weak complex at alpha = 0 -----------------------------

enum class RecoveryStatus { Commutes, CommutesUpToSign, Fails };

std::string recovery_status_name(RecoveryStatus s);  // "commutes", "commutes up to sign", "fails"

struct RecoveryResult {
  std::size_t p = 0;
  WeakVariant variant = WeakVariant::Explicit;
  RecoveryStatus status = RecoveryStatus::Fails;
};

/// Compares hochschild(W, lift(phi)) with lift(delta^p phi) over all basis
/// cochains phi of degree p-1, for p = 1..pmax and every weak variant.
/// W is the induced product with alpha = 0; alg must be totally associative.
std::vector<RecoveryResult> recovery_check(const Algebra& alg, std::size_t pmax, Check check = Check::Verify);

}  // namespace ternac
