#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "derivscope/algebra.hpp"

namespace derivscope {

/// Malformed algebra file; line is 1-based, 0 when no line applies.
struct AlgebraParseError : std::runtime_error {
  AlgebraParseError(int line_number, const std::string& message)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line(line_number) {}
  int line;
};

/// Text format:
///   dim <n>
///   <i> <j> <k> <value>     one structure constant c_ij^k, 0-based, i < j
/// '#' starts a comment, values are "p" or "p/q". Duplicate (i,j,k) keys,
/// i >= j, and out-of-range indices are errors.
Algebra parse_algebra(std::istream& in, std::string name = {});
Algebra parse_algebra_file(const std::string& path);

/// Canonical text: constants sorted by (i,j,k), zero entries omitted;
/// parse(serialize(a)) == a structurally.
std::string serialize_algebra(const Algebra& a);

}  // namespace derivscope
