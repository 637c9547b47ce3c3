#pragma once

#include <gmpxx.h>

#include "ortho/rational.hpp"
#include "ortho/weingarten.hpp"

namespace ortho {

// Argument of the symmetric function f: four nonnegative exponents.
struct Quad {
    long a = 0, b = 0, c = 0, d = 0;

    enum class Parity { AllEven, AllOdd, Mixed };
    Parity parity() const {
        int odd = static_cast<int>(a % 2) + static_cast<int>(b % 2) +
                  static_cast<int>(c % 2) + static_cast<int>(d % 2);
        return odd == 0 ? Parity::AllEven : odd == 4 ? Parity::AllOdd : Parity::Mixed;
    }

    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + "," + std::to_string(d) + ")";
    }
};

// f(a,b,c,d) = I([[a,c],[b,d]]) / (pdf(a+d+n-2) pdf(b+c+n-2)); symmetric in
// a,b,c,d. The numerator comes from the two-row formula when all entries are
// even and from the exact oracle when all are odd; mixed parity gives 0.
ExactRational f_value(const Quad& q, long n, int oracle_limit = kDefaultOracleLimit);

// The S/F/P quantities: S_k = prod (x+k), F_k = prod pdf(x+k),
// P_k = pdf(a+b+c+d+k). All symmetric in (a,b,c,d) by construction.
mpz_class quantity_S(long k, const Quad& q);
mpz_class quantity_F(long k, const Quad& q);
mpz_class quantity_P(long k, const Quad& q);

// Closed form for f(a,b,c,0), a,b,c even, n >= 3:
//   (n-2)! pdf(n-2) F_0 / (P_{n-1} F_{n-2}).
ExactRational f_triangular(long a, long b, long c, long n);

// The conjectured finite hypergeometric sums for f on all-even and all-odd
// quads. Exposed for verification sweeps against f_value, not as trusted
// evaluators. Both require n >= 4 (the terms carry 1/(n-3) factors).
ExactRational conjecture_even_sum(const Quad& q, long n);
ExactRational conjecture_odd_sum(const Quad& q, long n);

} // namespace ortho
