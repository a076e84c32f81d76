#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ternac/algebra.hpp"
#include "ternac/cochain.hpp"

namespace ternac {

/// Malformed algebra or cochain document. `location()` is a path such as
/// "constants[3].c", or "line 4, column 7" for syntax errors.
class DocumentError : public std::invalid_argument {
 public:
  DocumentError(std::string location, const std::string& message)
      : std::invalid_argument(location.empty() ? message : location + ": " + message),
        location_(std::move(location)),
        message_(message) {}
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// {"dim": 2, "arity": 3, "field": "Q",
///  "constants": [{"i": 1, "j": 1, "k": 1, "s": 1, "c": "1"}, ...]}
/// Indices are 1-based; "k" only for arity 3; absent constants are zero.
Algebra parse_algebra(std::string_view text);
Algebra read_algebra(const std::filesystem::path& path);
/// Nonzero constants in lexicographic (i, j, k, s) order, two-space indent.
std::string algebra_to_json(const Algebra& alg);

/// {"arity": 3, "degree": 1, "dim": 2, "field": "Q",
///  "entries": [{"inputs": [1, 2, 1], "output": 2, "c": "1/2"}, ...]}
Cochain parse_cochain(std::string_view text);
std::string cochain_to_json(const Cochain& f, Field field = Field::Rational);

}  // namespace ternac
