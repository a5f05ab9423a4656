#pragma once

#include <string>
#include <string_view>

#include "dio/integer.hpp"

namespace dio::cli {

// MatrixFile:  "m n\n" then m lines of n integers separated by single spaces.
// VectorFile:  "n\n" then one line of n integers.
// Lines starting with '#' are comments and may appear anywhere. Every line,
// including the last, ends in '\n'. Integers are base-10, arbitrarily long,
// with an optional leading '-'.
//
// Parse failures throw dio::Error(ParseError) naming the offending line.

IntMatrix parse_matrix(std::string_view text);
IntVector parse_vector(std::string_view text);

std::string render_matrix(const IntMatrix& a);
std::string render_vector(std::span<const Int> v);

/// Entries joined by single spaces, no trailing newline.
std::string join(std::span<const Int> v);

IntMatrix read_matrix_file(const std::string& path);
IntVector read_vector_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace dio::cli
