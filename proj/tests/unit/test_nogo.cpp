#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "oracle.hpp"
#include "ternac/nogo.hpp"

using namespace ternac;

namespace {

using Combination = std::map<int, long>;  // unknown index (1-based) -> coefficient

// a_i + s a_j
Combination pair(int i, long s, int j) { return {{i, 1}, {j, s}}; }

std::vector<std::string> keys(const std::vector<Combination>& combos, std::size_t k) {
  std::vector<std::string> out;
  for (const auto& c : combos) {
    Vector v(k);
    for (auto [i, s] : c) v[static_cast<std::size_t>(i - 1)] += Scalar(s);
    out.push_back(combination_string(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> keys(const ConstraintSystem& sys) {
  std::vector<std::string> out;
  for (const auto& r : sys.rows) out.push_back(combination_string(r.coefficients));
  std::sort(out.begin(), out.end());
  return out;
}

// The 28 combinations displayed for the ternary partial case.
std::vector<Combination> ternary_partial_display() {
  return {pair(7, -1, 8), pair(6, -1, 8), pair(5, 1, 8), pair(6, -1, 7), pair(5, -1, 7), pair(4, 1, 8),
          pair(4, 1, 7),  pair(5, -1, 6), pair(4, -1, 6), pair(1, 1, 8), pair(1, 1, 7), pair(1, 1, 6),
          pair(2, 1, 7),  pair(2, 1, 6),  pair(2, 1, 5),  pair(5, -1, 1), pair(2, -1, 1), pair(2, -1, 1),
          pair(2, -1, 8), pair(7, -1, 8), pair(3, 1, 6),  pair(3, 1, 5), pair(3, 1, 4), pair(4, -1, 1),
          pair(4, -1, 1), pair(3, -1, 1), pair(3, -1, 8), pair(3, -1, 8)};
}

std::vector<Combination> binary_skew_display() {
  return {pair(3, -1, 4), pair(2, 1, 4), pair(2, -1, 3), pair(1, 1, 4), pair(1, 1, 3),
          pair(3, 1, 5),  pair(2, 1, 5), pair(2, -1, 1), pair(5, -1, 1), pair(5, -1, 4)};
}

}  // namespace

TEST_CASE("ansatz shapes") {
  const Ansatz t = build_ansatz(NogoCase::TernaryPartial);
  REQUIRE(t.patterns.size() == 8);
  CHECK(t.symbol_arity == 5);
  CHECK(t.variables == 7);
  CHECK(t.patterns[0].str() == "m(x1, x2, f(x3, x4, x5, x6, x7))");
  CHECK(t.patterns[1].str() == "m(x1, f(x2, x3, x4, x5, x6), x7)");
  CHECK(t.patterns[2].str() == "m(f(x1, x2, x3, x4, x5), x6, x7)");
  CHECK(t.patterns[3].str() == "f(m(x1, x2, x3), x4, x5, x6, x7)");
  CHECK(t.patterns[7].str() == "f(x1, x2, x3, x4, m(x5, x6, x7))");
  CHECK(build_ansatz(NogoCase::TernaryAlt1).patterns == t.patterns);
  const Ansatz b = build_ansatz(NogoCase::BinarySkew);
  CHECK(b.patterns.size() == 5);
  CHECK(b.variables == 4);
  for (auto c : all_nogo_cases()) CHECK(parse_nogo_case(nogo_case_name(c)) == c);
}

TEST_CASE("ternary partial constraints match the displayed combinations") {
  const ConstraintSystem sys = derive_constraints(NogoCase::TernaryPartial);
  CHECK(sys.rows.size() == 28);
  CHECK(keys(sys) == keys(ternary_partial_display(), 8));
  const NogoReport report = solve(NogoCase::TernaryPartial);
  CHECK(report.dimension == 0);
  CHECK(report.verdict == "no δ³ exists");
}

TEST_CASE("binary skew constraints match the displayed combinations") {
  const ConstraintSystem sys = derive_constraints(NogoCase::BinarySkew);
  CHECK(sys.rows.size() == 10);
  CHECK(keys(sys) == keys(binary_skew_display(), 5));
  CHECK(solve(NogoCase::BinarySkew).dimension == 0);
}

TEST_CASE("alternate kinds admit no third coboundary either") {
  for (auto c : {NogoCase::TernaryAlt1, NogoCase::TernaryAlt2}) {
    const NogoReport r = solve(c);
    CHECK(r.dimension == 0);
    CHECK(oracle::gj_rank(r.system.matrix) == 8);
  }
}

TEST_CASE("weak control case has the general sign pattern") {
  const NogoReport r = solve(NogoCase::TernaryWeak);
  REQUIRE(r.dimension > 0);
  // m(x1,x2,f) + sum (-1)^i f(..m..) + (-1)^{p+1} m(f,..) at p = 3
  const Vector pattern{Scalar(1), Scalar(0), Scalar(1), Scalar(-1), Scalar(0), Scalar(1), Scalar(0), Scalar(-1)};
  std::vector<Vector> with = r.nullspace;
  with.push_back(pattern);
  CHECK(oracle::gj_rank(with) == r.dimension);
  CHECK(ansatz_composition(NogoCase::TernaryWeak, pattern, RuleSet::WeakTernary).empty());
}

TEST_CASE("solutions substitute back to the empty form") {
  for (auto c : all_nogo_cases()) {
    const NogoReport r = solve(c);
    for (const auto& v : r.nullspace) CHECK(ansatz_composition(c, v, r.system.rules).empty());
    const std::size_t k = build_ansatz(c).patterns.size();
    CHECK(ansatz_composition(c, Vector(k), r.system.rules).empty());
    CHECK(r.dimension == k - oracle::gj_rank(r.system.matrix));
  }
}

TEST_CASE("constraint rows are consistent with the composition") {
  oracle::Rng rng(83);
  for (auto c : {NogoCase::TernaryPartial, NogoCase::BinarySkew}) {
    const ConstraintSystem sys = derive_constraints(c);
    const std::size_t k = sys.matrix.cols();
    for (int trial = 0; trial < 5; ++trial) {
      Vector a(k);
      for (auto& x : a) x = oracle::random_scalar(rng);
      const LinearForm form = ansatz_composition(c, a, sys.rules);
      for (const auto& row : sys.rows) {
        Scalar expected;
        for (std::size_t i = 0; i < k; ++i) expected += row.coefficients[i] * a[i];
        CHECK(form.coefficient(row.term) == expected);
      }
      CHECK(form.size() <= sys.rows.size());
      const auto coords = ansatz_coordinates(build_ansatz(c), LinearForm());
      CHECK(coords);
    }
  }
}

TEST_CASE("combination strings") {
  CHECK(combination_string(Vector{Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1), Scalar(-1)}) ==
        "a7 - a8");
  CHECK(combination_string(Vector{Scalar(1), Scalar(0), Scalar(2)}) == "a1 + 2·a3");
}
