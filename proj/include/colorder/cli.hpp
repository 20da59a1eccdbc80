#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "colorder/algebra.hpp"

namespace colorder {

/// Parses the JSON algebra document
///   {"group": {"orders": [...]}, "bicharacter": {"exponents": [[...]]},
///    "basis": [{"name": ..., "degree": [...]}],
///    "brackets": [{"left": ..., "right": ..., "result": {name: scalar}}]}
/// Pairs listed in only one order get their partner from eps-antisymmetry;
/// pairs listed both ways are cross-checked. Throws ParseError for malformed
/// documents and ValidationError for bicharacter, grading-support or
/// antisymmetry violations.
ColorAlgebra parse_algebra_file(std::string_view text);

/// Canonical document: pairs (i <= j) with nonzero brackets, plus any (j, i)
/// that antisymmetry would not reproduce. Ends with a newline.
std::string serialize_algebra(const ColorAlgebra& a);

/// FNV-1a 64 of the compact canonical serialization, as 16 hex digits.
std::string fingerprint(const ColorAlgebra& a);

/// `catalog:NAME` or a path to an algebra file.
ColorAlgebra load_target(const std::string& target);

/// Entry point of the command-line tool. Exit codes: 0 all checks passed,
/// 1 some check failed, 2 usage or input error.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace colorder
