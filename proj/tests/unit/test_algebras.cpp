#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "ternac/algebra.hpp"
#include "ternac/identity.hpp"
#include "ternac/registry.hpp"

using namespace ternac;

namespace {

Vector e(std::size_t n, std::size_t k) { return basis_vector(n, k - 1); }

Vector combo(std::initializer_list<long> coeffs) {
  Vector v;
  for (long c : coeffs) v.emplace_back(c);
  return v;
}

bool holds(const Algebra& a, IdentityKind k) { return check_identity(a, k).holds; }

}  // namespace

TEST_CASE("totally-assoc-2d carries the eight listed products") {
  const Algebra a = totally_assoc_2d();
  CHECK(a.eval(e(2, 1), e(2, 1), e(2, 1)) == combo({1, 0}));
  CHECK(a.eval(e(2, 1), e(2, 1), e(2, 2)) == combo({0, 1}));
  CHECK(a.eval(e(2, 1), e(2, 2), e(2, 2)) == combo({1, 1}));
  CHECK(a.eval(e(2, 2), e(2, 1), e(2, 1)) == combo({0, 1}));
  CHECK(a.eval(e(2, 2), e(2, 2), e(2, 1)) == combo({1, 1}));
  CHECK(a.eval(e(2, 2), e(2, 2), e(2, 2)) == combo({1, 2}));
  CHECK(a.eval(e(2, 1), e(2, 2), e(2, 1)) == combo({0, 1}));
  CHECK(a.eval(e(2, 2), e(2, 1), e(2, 2)) == combo({1, 1}));
}

TEST_CASE("named examples satisfy their identities") {
  const Algebra total = totally_assoc_2d();
  CHECK(holds(total, IdentityKind::TotallyAssociative));
  CHECK(holds(total, IdentityKind::WeakTotallyAssociative));
  const auto partial = check_identity(total, IdentityKind::PartiallyAssociative);
  REQUIRE_FALSE(partial.holds);
  REQUIRE(partial.counterexample);
  CHECK(partial.counterexample->tuple == std::vector<std::size_t>(5, 0));
  CHECK(partial.counterexample->defect == combo({3, 0}));

  CHECK(holds(partially_assoc_2d(), IdentityKind::PartiallyAssociative));
  CHECK(partially_assoc_2d().eval(e(2, 1), e(2, 1), e(2, 1)) == combo({0, 1}));

  const Algebra c4 = cross4();
  CHECK(c4.eval(e(4, 1), e(4, 2), e(4, 3)) == combo({0, 0, 0, 1}));
  CHECK(holds(c4, IdentityKind::SkewSymmetric));
  CHECK(holds(c4, IdentityKind::NambuFundamental));

  CHECK(holds(builtin_example("assoc-unit-1d"), IdentityKind::BinaryAssociative));
  CHECK(holds(builtin_example("skew-nil-2d"), IdentityKind::BinarySkewAssociative));
}

TEST_CASE("registry names and zero algebras") {
  const auto list = builtin_examples();
  REQUIRE(list.size() >= 3);
  for (const auto& info : list) CHECK_NOTHROW(builtin_example(info.name));
  CHECK(builtin_example("zero:3:3") == zero_algebra(3, 3));
  CHECK(builtin_example("zero(2,2)") == zero_algebra(2, 2));
  CHECK_THROWS_AS(builtin_example("nonsense"), std::invalid_argument);
  for (auto k : all_identity_kinds())
    if (identity_arity(k) == 3) CHECK(holds(zero_algebra(2, 3), k));
}

TEST_CASE("identity names round trip") {
  for (auto k : all_identity_kinds()) CHECK(parse_identity(identity_name(k)) == k);
  CHECK_THROWS_AS(parse_identity("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(check_identity(cross4(), IdentityKind::BinaryAssociative), std::invalid_argument);
}

TEST_CASE("identity checks agree with direct evaluation on random algebras") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra a = oracle::random_algebra(rng, 2, 3, trial % 2 == 0 ? 0.15 : 0.4);
    CHECK(holds(a, IdentityKind::PartiallyAssociative) == oracle::partially_associative(a));
    CHECK(holds(a, IdentityKind::TotallyAssociative) == oracle::totally_associative(a));
    CHECK(holds(a, IdentityKind::WeakTotallyAssociative) == oracle::weak_totally_associative(a));
    CHECK(holds(a, IdentityKind::SkewSymmetric) == oracle::skew_symmetric(a));
    const Algebra b = oracle::random_algebra(rng, 2, 2, 0.3);
    CHECK(holds(b, IdentityKind::BinaryAssociative) == oracle::binary_associative(b));
  }
}

TEST_CASE("structured generators land where they should") {
  oracle::Rng rng(7);
  const Algebra tri = oracle::ternary_from_binary(oracle::upper_triangular());
  CHECK(oracle::binary_associative(oracle::upper_triangular()));
  CHECK(holds(tri, IdentityKind::TotallyAssociative));
  CHECK(holds(oracle::graded_partial_small(), IdentityKind::PartiallyAssociative));
  CHECK(oracle::partially_associative(oracle::graded_partial_small()));
  for (int trial = 0; trial < 5; ++trial) {
    const ExactMatrix p = oracle::random_invertible(rng, 2);
    const Algebra c = oracle::conjugate(totally_assoc_2d(), p);
    CHECK(holds(c, IdentityKind::TotallyAssociative));
    CHECK_FALSE(holds(c, IdentityKind::PartiallyAssociative));
    CHECK(holds(oracle::conjugate(partially_assoc_2d(), p), IdentityKind::PartiallyAssociative));
    CHECK(holds(oracle::conjugate(cross4(), oracle::random_invertible(rng, 4)), IdentityKind::NambuFundamental));
  }
}

TEST_CASE("induced bracket matches the signed sum") {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Algebra a = oracle::random_algebra(rng, 2, 3, 0.3);
    const Algebra b = induced_lie_bracket(a);
    CHECK(b == oracle::bracket_of(a));
    CHECK(holds(b, IdentityKind::SkewSymmetric));
  }
  // cross4 is already alternating, so the bracket is 6 m
  const Algebra b = induced_lie_bracket(cross4());
  CHECK(b.eval(e(4, 1), e(4, 2), e(4, 3)) == combo({0, 0, 0, 6}));
}

TEST_CASE("Lie identities agree with direct evaluation") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const Algebra b = induced_lie_bracket(oracle::random_algebra(rng, 2, 3, 0.3));
    CHECK(holds(b, IdentityKind::TernaryLieS5) == oracle::lie_jacobi(b, 5));
    CHECK(holds(b, IdentityKind::TernaryLieS3) == oracle::lie_jacobi(b, 3));
  }
  const Algebra b = induced_lie_bracket(oracle::graded_partial_small());
  CHECK(holds(b, IdentityKind::TernaryLieS5) == oracle::lie_jacobi(b, 5));
}

TEST_CASE("five-term Jacobi holds in the free partially associative algebra") {
  CHECK(oracle::free_jacobi(5, RuleSet::PartialTernary).empty());
  // the three-term sum survives, and the five-term one needs the identity
  CHECK_FALSE(oracle::free_jacobi(3, RuleSet::PartialTernary).empty());
  CHECK_FALSE(oracle::free_jacobi(5, RuleSet::TotalTernary).empty());
}

TEST_CASE("evaluation errors") {
  const Algebra a = totally_assoc_2d();
  CHECK_THROWS_AS(a.eval(e(2, 1), e(2, 1)), DimensionMismatch);
  CHECK_THROWS_AS(a.eval(e(3, 1), e(2, 1), e(2, 1)), DimensionMismatch);
}
