#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onegen/linear_matrix.hpp"

namespace onegen {

struct ParsedMatrix {
    LinearMatrix matrix;
    std::vector<std::string> warnings;
};

/// Parses the text format
///   field: <prime> | QQ
///   vars: a, b, c
///   matrix:
///   <m lines of n comma-separated linear forms>
/// with '#' comments. Errors are ParseError with 1-based line and column.
ParsedMatrix parse_matrix_text(std::string_view text, const std::string &source = "<text>");
ParsedMatrix parse_matrix_file(const std::string &path);

/// The same format, readable by parse_matrix_text.
std::string format_matrix(const LinearMatrix &M);

/// "hankel:m,n", "generic:m,n" or "symmetric:n".
LinearMatrix builtin_matrix(std::string_view spec);

} // namespace onegen
