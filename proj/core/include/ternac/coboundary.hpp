#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ternac/cochain.hpp"
#include "ternac/freeterm.hpp"
#include "ternac/matrix.hpp"

namespace ternac {

/// Requested operator does not exist for the theory (e.g. a third partial
/// coboundary).
class UndefinedOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The algebra does not satisfy the identity the theory is built on.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Check { Verify, Assume };

/// Weak theory sign conventions.
///   Explicit: four-term first coboundary, general formula from degree 2 on.
///   General: the general formula at every degree (three terms at degree 1).
///   RemarkDisplay: no interior signs, trailing sign (-1)^p.
enum class WeakVariant { Explicit, General, RemarkDisplay };

std::string weak_variant_name(WeakVariant v);  // "explicit", "general", "remark"
WeakVariant parse_weak_variant(std::string_view name);
std::vector<WeakVariant> all_weak_variants();

/// Grading: delta^p takes a degree-(p-1) cochain to a degree-p cochain.
/// Partial, alternate and skew theories define p = 1, 2; the weak and
/// Hochschild theories define every p >= 1.
bool delta_defined(Theory theory, std::size_t p);

/// delta^p applied to a cochain named "f", over the inputs of a degree-p
/// cochain. Throws UndefinedOperator.
OperatorTemplate delta_template(Theory theory, std::size_t p, WeakVariant variant = WeakVariant::Explicit);

/// Evaluates the template on the cochain f, term by term.
Cochain apply_template(const Algebra& alg, const OperatorTemplate& op, const Cochain& f);

/// One block of rows of the operator matrix: the rows for output tuple
/// `flat_output`, one sparse row per output coordinate s.
using SparseRow = std::map<std::size_t, Scalar>;
using RowBlockVisitor = std::function<void(std::size_t flat_output, const std::vector<SparseRow>& rows)>;

/// Streams the operator matrix (row index flat_output * n + s, column index
/// flat_input * n + t of the input cochain table) without storing it.
void for_each_row_block(const Algebra& alg, const OperatorTemplate& op, const RowBlockVisitor& visit);

ExactMatrix matrixize(const Algebra& alg, const OperatorTemplate& op);
ExactMatrix matrixize(const Algebra& alg, Theory theory, std::size_t p, WeakVariant variant = WeakVariant::Explicit);

/// Theory-specific entry points; the output degree is f.degree() + 1.
Cochain delta(const Algebra& alg, Theory theory, const Cochain& f, WeakVariant variant = WeakVariant::Explicit,
              Check check = Check::Verify);
Cochain delta_partial(const Algebra& alg, const Cochain& f, Check check = Check::Verify);
Cochain delta_weak(const Algebra& alg, const Cochain& f, WeakVariant variant = WeakVariant::Explicit,
                   Check check = Check::Verify);
Cochain delta_skew(const Algebra& alg, const Cochain& f, Check check = Check::Verify);
/// Hochschild coboundary of a binary degree-q cochain (q+1 inputs).
Cochain hochschild(const Algebra& alg, const Cochain& f, Check check = Check::Verify);

/// Throws PreconditionError when alg fails the theory's identity, and
/// std::invalid_argument on an arity mismatch.
void require_theory(const Algebra& alg, Theory theory);

struct CohomologyReport {
  Theory theory;
  std::size_t p = 0;
  std::size_t dim_cochains = 0;      // dimension of the space delta^p acts on
  std::size_t dim_cocycles = 0;      // nullity of delta^p
  std::size_t dim_coboundaries = 0;  // rank of delta^{p-1}, 0 when p = 1
  std::size_t dim_h = 0;
};

CohomologyReport cohomology(const Algebra& alg, Theory theory, std::size_t p,
                            WeakVariant variant = WeakVariant::Explicit, Check check = Check::Verify);

/// Basis of the maps f: V -> V with f(m(x..)) = sum of m(.., f(x_i), ..).
std::vector<Cochain> derivations(const Algebra& alg);

struct CompositionReport {
  std::size_t p = 0;  // checks delta^{p+1} ∘ delta^p
  std::size_t outer_rows = 0;
  std::size_t outer_cols = 0;
  std::size_t inner_cols = 0;
  bool vanishes = true;
};

/// Exact product of the matrices of delta^{p+1} and delta^p; the outer
/// matrix is streamed row by row.
CompositionReport check_composition(const Algebra& alg, Theory theory, std::size_t p,
                                    WeakVariant variant = WeakVariant::Explicit);

/// check_composition for p = 1..pmax where both operators are defined.
std::vector<CompositionReport> verify_complex(const Algebra& alg, Theory theory, std::size_t pmax,
                                              WeakVariant variant = WeakVariant::Explicit,
                                              Check check = Check::Verify);

}  // namespace ternac
