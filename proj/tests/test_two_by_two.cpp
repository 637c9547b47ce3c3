#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>

#include "ortho/errors.hpp"
#include "ortho/factorial.hpp"
#include "ortho/two_by_two.hpp"

using namespace ortho;

namespace {
ExactRational q(long num, long den) {
    return ExactRational(mpz_class(num), mpz_class(den));
}
} // namespace

TEST_CASE("parity classification") {
    CHECK(Quad{0, 0, 0, 0}.parity() == Quad::Parity::AllEven);
    CHECK(Quad{2, 4, 0, 2}.parity() == Quad::Parity::AllEven);
    CHECK(Quad{1, 1, 1, 1}.parity() == Quad::Parity::AllOdd);
    CHECK(Quad{1, 2, 1, 1}.parity() == Quad::Parity::Mixed);
}

TEST_CASE("f anchors") {
    CHECK(f_value(Quad{0, 0, 0, 0}, 3) == q(1, 1));
    CHECK(f_value(Quad{2, 0, 0, 0}, 3) == q(1, 6));
    CHECK(f_value(Quad{1, 1, 1, 1}, 4) == q(-1, 648));
    CHECK(f_value(Quad{1, 2, 1, 1}, 4) == q(0, 1));
}

TEST_CASE("S, F, P quantities") {
    CHECK(quantity_S(0, Quad{2, 2, 2, 2}) == 16);
    CHECK(quantity_S(1, Quad{1, 1, 1, 1}) == 16);
    CHECK(quantity_F(0, Quad{2, 0, 0, 0}) == 1);
    CHECK(quantity_F(2, Quad{2, 0, 0, 0}) == 3);
    CHECK(quantity_P(2, Quad{2, 0, 0, 0}) == 3);
    CHECK(quantity_P(2, Quad{1, 1, 1, 1}) == 15);
}

TEST_CASE("S, F, P are symmetric in the four exponents") {
    std::array<long, 4> v{1, 2, 3, 4};
    mpz_class s0 = quantity_S(0, Quad{1, 2, 3, 4});
    mpz_class f2 = quantity_F(2, Quad{1, 2, 3, 4});
    mpz_class p1 = quantity_P(1, Quad{1, 2, 3, 4});
    std::sort(v.begin(), v.end());
    do {
        Quad perm{v[0], v[1], v[2], v[3]};
        CHECK(quantity_S(0, perm) == s0);
        CHECK(quantity_F(2, perm) == f2);
        CHECK(quantity_P(1, perm) == p1);
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("f is symmetric under all 24 exponent permutations") {
    for (long n : {3L, 4L, 5L}) {
        std::array<long, 4> even{0, 2, 2, 4};
        ExactRational ref = f_value(Quad{even[0], even[1], even[2], even[3]}, n);
        do {
            CHECK(f_value(Quad{even[0], even[1], even[2], even[3]}, n) == ref);
        } while (std::next_permutation(even.begin(), even.end()));
    }
    std::array<long, 4> odd{1, 1, 1, 3};
    ExactRational ref = f_value(Quad{odd[0], odd[1], odd[2], odd[3]}, 4);
    do {
        CHECK(f_value(Quad{odd[0], odd[1], odd[2], odd[3]}, 4) == ref);
    } while (std::next_permutation(odd.begin(), odd.end()));
}

TEST_CASE("triangular closed form for f") {
    CHECK(f_triangular(0, 0, 0, 3) == q(1, 1));
    CHECK(f_triangular(2, 0, 0, 3) == q(1, 6));
    for (long n : {3L, 4L, 5L, 6L})
        for (long a = 0; a <= 4; a += 2)
            for (long b = 0; b <= 4; b += 2)
                for (long c = 0; c <= 2; c += 2)
                    CHECK(f_triangular(a, b, c, n) == f_value(Quad{a, b, c, 0}, n));
    CHECK_THROWS_AS(f_triangular(1, 2, 2, 4), parity_error);
    CHECK_THROWS_AS(f_triangular(2, 2, 2, 2), domain_error);
}

TEST_CASE("even conjectured sum reduces to the triangular form at d=0") {
    for (long n = 4; n <= 7; ++n)
        for (long a = 0; a <= 4; a += 2)
            for (long b = 0; b <= 4; b += 2)
                for (long c = 0; c <= 4; c += 2)
                    CHECK(conjecture_even_sum(Quad{a, b, c, 0}, n) ==
                          f_triangular(a, b, c, n));
}

TEST_CASE("conjectured sums match f on small quads") {
    for (long n = 4; n <= 6; ++n) {
        for (long a = 0; a <= 2; a += 2)
            for (long b = 0; b <= 2; b += 2)
                for (long c = 0; c <= 2; c += 2)
                    for (long d = 0; d <= 2; d += 2) {
                        Quad qd{a, b, c, d};
                        CHECK(conjecture_even_sum(qd, n) == f_value(qd, n));
                    }
        CHECK(conjecture_odd_sum(Quad{1, 1, 1, 1}, n) ==
              f_value(Quad{1, 1, 1, 1}, n));
        CHECK(conjecture_odd_sum(Quad{1, 1, 1, 3}, n) ==
              f_value(Quad{1, 1, 1, 3}, n));
    }
    CHECK(conjecture_odd_sum(Quad{1, 1, 1, 1}, 4) == q(-1, 648));
}

TEST_CASE("conjectured sums require n >= 4") {
    CHECK_THROWS_AS(conjecture_even_sum(Quad{2, 2, 2, 2}, 3), domain_error);
    CHECK_THROWS_AS(conjecture_odd_sum(Quad{1, 1, 1, 1}, 3), domain_error);
}
