#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ternac::cli {

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;       // a check ran and its verdict is negative
inline constexpr int kInputError = 2;  // bad flags, files or bounds

struct Limits {
  std::size_t max_dim = 4;
  std::size_t max_degree = 3;
};

/// TERNAC_MAX_DIM / TERNAC_MAX_DEGREE override the defaults. Throws
/// std::invalid_argument on values that are not positive integers.
Limits limits_from_environment();

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Limits& limits);

}  // namespace ternac::cli
