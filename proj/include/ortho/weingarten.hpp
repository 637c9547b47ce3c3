#pragma once

#include <gmpxx.h>

#include <vector>

#include "ortho/exponent_matrix.hpp"
#include "ortho/pairing.hpp"
#include "ortho/rational.hpp"

namespace ortho {

// Degree limits. Gram construction is allowed one degree further than exact
// oracle solves; (2k-1)!! growth makes k=6 a 10395-pairing opt-in.
inline constexpr int kDefaultGramLimit = 6;
inline constexpr int kDefaultOracleLimit = 6;

// Gram matrix of the pairing vectors: entry (pi, sigma) = n^{|pi v sigma|},
// indexed in canonical pairing order. Symmetric, diagonal n^k.
struct GramMatrix {
    int k = 0;
    long n = 0;
    std::size_t size = 0;
    std::vector<mpz_class> entries; // row-major size*size

    const mpz_class& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

GramMatrix gram_matrix(int k, long n, int limit = kDefaultGramLimit);

// Entry (p, s) of the Weingarten matrix W_kn = G_kn^{-1}, obtained by one
// exact fraction-free solve of G x = e_s. Refuses with gram_singular_error
// when G is not invertible at this n.
ExactRational weingarten_entry(int k, long n, const Pairing& p, const Pairing& s,
                               int limit = kDefaultGramLimit);

// The full Weingarten matrix in canonical pairing order. Entries depend on
// (pi, sigma) only through the cycle type of their join, so the matrix is
// assembled from one weight per type (see integral_oracle below).
std::vector<std::vector<ExactRational>> weingarten_matrix(int k, long n,
                                                          int limit = kDefaultGramLimit);

// Exact ground truth: evaluates I(a) at integer n via the Weingarten sum
//   I(a) = sum_{pi, sigma} delta_pi(i) delta_sigma(j) W_kn(pi, sigma).
// Returns 0 immediately when a row or column sum of a is odd, 1 for the
// empty product. The fitting-pairing sets are built directly from the
// multi-index equality classes, and W is contracted through its join-type
// weights, so the cost is |fits(i)| * |fits(j)| joins plus one small exact
// solve per (k, n). When the Gram matrix is singular (n < k) the sum is
// taken with W = G^+, evaluated through one consistent singular solve
// collapsed over the stabilizer orbits of the column multi-index.
ExactRational integral_oracle(const ExponentMatrix& a, long n,
                              int limit = kDefaultOracleLimit);

// The k x k elementary matrix of a pair of pairings (strings labeled in
// canonical order): a_ij = #(pi_i intersect sigma_j). Row and column sums
// are all 2, and I(a) equals the Weingarten entry W_kn(pi, sigma).
ExponentMatrix elementary_matrix_of(const Pairing& p, const Pairing& s);

} // namespace ortho
