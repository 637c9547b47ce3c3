#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ortho/exponent_matrix.hpp"

namespace ortho {

// "2,0;0,2" -> [[2,0],[0,2]]. Whitespace is tolerated anywhere; ragged rows,
// non-integer tokens and empty input raise parse_error with a position.
ExponentMatrix parse_matrix(const std::string& text);

// "2,2" -> {2, 2}.
std::vector<long> parse_vector(const std::string& text);

// "4:8" -> {4, 8}; "4" -> {4, 4}. Inclusive bounds.
std::pair<long, long> parse_n_range(const std::string& text);

} // namespace ortho
