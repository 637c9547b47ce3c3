#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ortho/closed_forms.hpp"
#include "ortho/errors.hpp"
#include "ortho/weingarten.hpp"

using namespace ortho;

namespace {
ExactRational q(long num, long den) {
    return ExactRational(mpz_class(num), mpz_class(den));
}
} // namespace

TEST_CASE("Gram matrix at k=2 is the n^2 / n pattern") {
    GramMatrix g = gram_matrix(2, 3);
    CHECK(g.size == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(g.at(i, j) == (i == j ? 9 : 3));
}

TEST_CASE("Weingarten entries at k=2: (n+1)/(n(n-1)(n+2)) and -1/(n(n-1)(n+2))") {
    auto all = enumerate_pairings(2);
    for (long n : {3L, 4L, 5L, 7L}) {
        long denom = n * (n - 1) * (n + 2);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                ExactRational expected = i == j ? q(n + 1, denom) : q(-1, denom);
                CHECK(weingarten_entry(2, n, all[i], all[j]) == expected);
            }
    }
    CHECK(weingarten_entry(2, 3, all[0], all[0]) == q(2, 15));
    CHECK(weingarten_entry(2, 3, all[0], all[1]) == q(-1, 30));
}

TEST_CASE("k=1 Weingarten matrix is the 1x1 [1/n]") {
    auto w = weingarten_matrix(1, 5);
    CHECK(w.size() == 1);
    CHECK(w[0][0] == q(1, 5));
}

TEST_CASE("full matrix agrees with the single-entry dense solve") {
    // Two routes: the matrix comes from the class-collapsed solve, the entry
    // from a dense fraction-free elimination on the full Gram system.
    for (int k = 1; k <= 3; ++k)
        for (long n : {3L, 4L, 6L}) {
            auto all = enumerate_pairings(k);
            auto w = weingarten_matrix(k, n);
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = 0; j < all.size(); ++j)
                    CHECK(w[i][j] == weingarten_entry(k, n, all[i], all[j]));
        }
}

TEST_CASE("oracle reproduces the degree-4 moments at n=3") {
    CHECK(integral_oracle(ExponentMatrix({{4}}), 3) == q(1, 5));
    CHECK(integral_oracle(ExponentMatrix({{2, 2}}), 3) == q(1, 15));
    CHECK(integral_oracle(ExponentMatrix({{2, 0}, {0, 2}}), 3) == q(2, 15));
    CHECK(integral_oracle(ExponentMatrix({{1, 1}, {1, 1}}), 3) == q(-1, 30));
    CHECK(integral_oracle(ExponentMatrix({{2, 0}, {2, 0}}), 3) == q(1, 15));
}

TEST_CASE("oracle base and degenerate cases") {
    CHECK(integral_oracle(ExponentMatrix(), 4) == q(1, 1));
    CHECK(integral_oracle(ExponentMatrix({{0, 0}}), 4) == q(1, 1));
    CHECK(integral_oracle(ExponentMatrix({{2}}), 7) == q(1, 7));
    CHECK(integral_oracle(ExponentMatrix({{1}}), 5) == q(0, 1));
    CHECK(integral_oracle(ExponentMatrix({{1, 0}, {0, 1}}), 5) == q(0, 1));
    CHECK_THROWS_AS(integral_oracle(ExponentMatrix({{2}}), 1), domain_error);
    CHECK_THROWS_AS(integral_oracle(ExponentMatrix({{14}}), 9), resource_error);
}

TEST_CASE("oracle is invariant under transposition") {
    std::vector<ExponentMatrix> cases = {
        ExponentMatrix({{2, 2}, {0, 0}}),
        ExponentMatrix({{2, 1}, {0, 1}}),
        ExponentMatrix({{2, 0, 0}, {1, 1, 0}, {1, 1, 2}}),
        ExponentMatrix({{1, 1, 1, 1}, {1, 1, 1, 1}}),
    };
    for (const auto& a : cases)
        for (long n : {4L, 5L})
            CHECK(integral_oracle(a, n) == integral_oracle(a.transposed(), n));
}

TEST_CASE("elementary matrix of a pairing pair") {
    Pairing id = parse_pairing("(1 2)(3 4)");
    Pairing cross = parse_pairing("(1 3)(2 4)");
    CHECK(elementary_matrix_of(id, id) == ExponentMatrix({{2, 0}, {0, 2}}));
    CHECK(elementary_matrix_of(id, cross) == ExponentMatrix({{1, 1}, {1, 1}}));

    Pairing p = parse_pairing("(1 2)(3 4)(5 6)");
    Pairing s = parse_pairing("(1 3)(2 4)(5 6)");
    CHECK(elementary_matrix_of(p, s) ==
          ExponentMatrix({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}}));
}

TEST_CASE("Weingarten entries are integrals of their elementary matrices") {
    for (int k = 1; k <= 3; ++k) {
        auto all = enumerate_pairings(k);
        for (long n : {3L, 5L})
            for (const auto& p : all)
                for (const auto& s : all)
                    CHECK(weingarten_entry(k, n, p, s) ==
                          integral_oracle(elementary_matrix_of(p, s), n));
    }
}

TEST_CASE("singular Gram matrix is refused by the entry solver") {
    // at n=1 the k=2 Gram matrix is the all-ones matrix
    auto all = enumerate_pairings(2);
    CHECK_THROWS_AS(weingarten_entry(2, 1, all[0], all[0]), gram_singular_error);
}

TEST_CASE("oracle stays exact where the Gram matrix is singular (n < k)") {
    // at n = 2 every degree-10 two-row integral has k = 5 > n, yet the
    // closed form of the n = 2 integral pins the value exactly
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 2; ++c) {
                long d = 10 - a - b - c;
                if (d < 0) continue;
                CHECK(integral_oracle(ExponentMatrix({{a, c}, {b, d}}), 2) ==
                      integral_n2(a, b, c, d));
            }
    // degree 10 one-row at n = 3 (k = 5 > 3) against the one-row closed form
    CHECK(integral_oracle(ExponentMatrix({{10}}), 3) == one_row_integral({10}, 3));
    CHECK(integral_oracle(ExponentMatrix({{6, 4}}), 3) ==
          one_row_integral({6, 4}, 3));
}
