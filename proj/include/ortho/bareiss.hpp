#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ortho/rational.hpp"

namespace ortho {

// Solves the square integer system A x = b by fraction-free (Bareiss)
// Gaussian elimination, with a single rational back substitution at the end.
// A is row-major m x m. Returns nullopt when a zero pivot column is met,
// i.e. when A is singular.
std::optional<std::vector<ExactRational>>
bareiss_solve(std::vector<mpz_class> a, std::size_t m, std::vector<mpz_class> b);

} // namespace ortho
