#pragma once

#include <gmpxx.h>

namespace ortho {

// Standard factorial m!.
mpz_class factorial(long m);

// The double factorial convention used by every closed form in this library:
//   paper_double_factorial(m) = (m-1)(m-3)(m-5)...  ending at 1 or 2,
// i.e. the standard double factorial of (m-1), with
//   paper_double_factorial(0) = paper_double_factorial(1) = paper_double_factorial(2) = 1.
// Keeping this under its own name (instead of a generic "double_factorial")
// guards against the off-by-one relative to the usual convention.
mpz_class paper_double_factorial(long m);

// Binomial coefficient C(m, r); returns 0 when r > m.
mpz_class binomial(long m, long r);

} // namespace ortho
