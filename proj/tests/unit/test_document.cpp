#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "ternac/document.hpp"
#include "ternac/registry.hpp"

using namespace ternac;

namespace {

std::string location_of(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const DocumentError& e) {
    return e.location();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("algebra documents round trip") {
  for (const auto& info : builtin_examples()) {
    const Algebra a = builtin_example(info.name);
    const std::string text = algebra_to_json(a);
    CHECK(parse_algebra(text) == a);
    CHECK(algebra_to_json(parse_algebra(text)) == text);
  }
  oracle::Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Field f = trial % 2 == 0 ? Field::Rational : Field::Gaussian;
    const Algebra a = oracle::random_algebra(rng, 1 + rng() % 3, trial % 3 == 0 ? 2 : 3, 0.3, f);
    CHECK(parse_algebra(algebra_to_json(a)) == a);
  }
}

TEST_CASE("algebra output format") {
  const std::string text = algebra_to_json(partially_assoc_2d());
  CHECK(text ==
        "{\n"
        "  \"dim\": 2,\n"
        "  \"arity\": 3,\n"
        "  \"field\": \"Q\",\n"
        "  \"constants\": [\n"
        "    {\n"
        "      \"i\": 1,\n"
        "      \"j\": 1,\n"
        "      \"k\": 1,\n"
        "      \"s\": 2,\n"
        "      \"c\": \"1\"\n"
        "    }\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("optional fields are accepted") {
  const Algebra a = parse_algebra(
      R"({"name": "x", "description": "y", "dim": 1, "arity": 2, "constants": [{"i": 1, "j": 1, "s": 1, "c": "1"}]})");
  CHECK(a.field() == Field::Rational);
  CHECK(a == builtin_example("assoc-unit-1d"));
}

TEST_CASE("malformed algebra documents report where") {
  const std::string head = R"({"dim": 2, "arity": 3, "constants": [)";
  CHECK(location_of(head + R"({"i": 1, "j": 1, "k": 1, "s": 1, "c": "1/0"}]})") == "constants[0].c");
  CHECK(location_of(head + R"({"i": 1, "j": 1, "k": 1, "s": 1, "c": 1}]})") == "constants[0].c");
  CHECK(location_of(head + R"({"i": 1, "j": 1, "k": 1, "s": 1, "c": "i"}]})") == "constants[0].c");
  CHECK(location_of(head + R"({"i": 1, "j": 1, "k": 3, "s": 1, "c": "1"}]})") == "constants[0].k");
  CHECK(location_of(head + R"({"i": 0, "j": 1, "k": 1, "s": 1, "c": "1"}]})") == "constants[0].i");
  CHECK(location_of(head + R"({"i": 1, "j": 1, "s": 1, "c": "1"}]})") == "constants[0]");
  CHECK(location_of(head + R"({"i": 1, "j": 1, "k": 1, "s": 1, "c": "1", "t": 2}]})") == "constants[0].t");
  CHECK(location_of(head + R"({"i": 1, "j": 1, "k": 1, "s": 1, "c": "1"}, {"i": 1, "j": 1, "k": 1, "s": 1, "c": "2"}]})") ==
        "constants[1]");
  CHECK(location_of(R"({"dim": 2, "arity": 4, "constants": []})") == "arity");
  CHECK(location_of(R"({"dim": 0, "arity": 3, "constants": []})") == "dim");
  CHECK(location_of(R"({"dim": 2, "arity": 3, "field": "R", "constants": []})") == "field");
  CHECK(location_of(R"({"dim": 2, "arity": 3})") == "");
  CHECK(location_of(R"({"dim": 2, "dim": 3, "arity": 3, "constants": []})") == "");
  CHECK(location_of("{\"dim\": 2,\n \"arity\": }") == "line 2, column 11");
}

TEST_CASE("reading files prefixes the path") {
  const auto path = std::filesystem::temp_directory_path() / "ternac_bad_algebra.json";
  {
    std::ofstream out(path);
    out << R"({"dim": 2, "arity": 3, "constants": [{"i": 1, "j": 1, "k": 1, "s": 9, "c": "1"}]})";
  }
  try {
    read_algebra(path);
    FAIL("accepted an out-of-range index");
  } catch (const DocumentError& e) {
    CHECK(e.location() == path.string() + ": constants[0].s");
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_algebra(path), DocumentError);
}

TEST_CASE("cochain documents round trip") {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Cochain f = oracle::random_cochain(rng, trial % 2 == 0 ? 3 : 2, rng() % 3, 2);
    CHECK(parse_cochain(cochain_to_json(f)) == f);
  }
  CHECK_THROWS_AS(parse_cochain(R"({"dim": 2, "arity": 3, "degree": 1, "entries": [{"inputs": [1, 2], "output": 1, "c": "1"}]})"),
                  DocumentError);
}
