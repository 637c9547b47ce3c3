#pragma once

#include <vector>

#include "ortho/exponent_matrix.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// Pair of equal-length nonnegative-integer vectors (a, b), the literal even
// exponents of a two-row integral / Phi argument. Zero padding is allowed.
struct TwoRowSpec {
    std::vector<long> a;
    std::vector<long> b;
};

struct PhiValue {
    ExactRational value;
    long n = 0;
    TwoRowSpec spec;
};

// One-row integral over O_n: pdf(n-1) * prod pdf(a_i) / pdf(sum a_i + n - 1),
// where pdf is paper_double_factorial. Entries must be even.
ExactRational one_row_integral(const std::vector<long>& a, long n);

// The n=2 closed form for I([[a,c],[b,d]]):
//   eps * pdf(a+d) * pdf(b+c) / pdf(a+b+c+d+1)
// with eps = 1 all even, -1 all odd, 0 mixed.
ExactRational integral_n2(long a, long b, long c, long d);

// Phi normalization: I(a;b) = I_{n-1}(a) I_{n-1}(b) Phi(a;b). The conversion
// factor is pdf(Sa+n-2) pdf(Sb+n-2) / (pdf(n-2)^2 prod pdf(a_i) prod pdf(b_i)).
PhiValue phi_from_integral(const TwoRowSpec& spec, const ExactRational& integral, long n);
ExactRational integral_from_phi(const PhiValue& phi);

// Phi(a; 0) = pdf(n-1)/pdf(n-2) * pdf(Sa+n-2)/pdf(Sa+n-1).
ExactRational phi_one_row(const std::vector<long>& a, long n);

// K_r(a, b) = 4^r a! b! / ((2r)! (a-r)! (b-r)!), the elementary expansion
// coefficient; requires 0 <= r <= min(a, b).
ExactRational expansion_coefficient(long r, long a, long b);

// Phi of the elementary matrix with 2r coupled columns, a columns (2;0) and
// b columns (0;2):
//   (-1)^r pdf(n-1)/pdf(n-2) * pdf(2r) pdf(2a+2b+2r+n-2) / pdf(2a+2b+4r+n-1).
ExactRational elementary_phi(long r, long a, long b, long n);

// The two-row formula. Inputs are the HALF exponents: evaluates Phi(2a; 2b)
// as the double sum over r_i = 0..min(a_i, b_i).
ExactRational phi_two_row(const std::vector<long>& half_a,
                          const std::vector<long>& half_b, long n);

// I(2a; 2b) via phi_two_row and the Phi conversion. Half exponents again.
ExactRational integral_two_row(const std::vector<long>& half_a,
                               const std::vector<long>& half_b, long n);

// Phi([[a, c], [b, 0]]) in closed form, literal even exponents:
//   pdf(n-1)/pdf(n-2) * pdf(a+c+n-2) pdf(b+c+n-2) / (pdf(c+n-2) pdf(a+b+c+n-1)).
ExactRational phi_triangular(long a, long b, long c, long n);

// Joint moments of two coordinates in generic position; 0 when alpha or
// beta is odd.
ExactRational joint_moments(long alpha, long beta, long n);

} // namespace ortho
