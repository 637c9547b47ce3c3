#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ortho/closed_forms.hpp"
#include "ortho/errors.hpp"
#include "ortho/weingarten.hpp"

using namespace ortho;

namespace {
ExactRational q(long num, long den) {
    return ExactRational(mpz_class(num), mpz_class(den));
}
} // namespace

TEST_CASE("one-row integrals") {
    CHECK(one_row_integral({2}, 3) == q(1, 3));
    CHECK(one_row_integral({4}, 3) == q(1, 5));
    CHECK(one_row_integral({2, 2}, 3) == q(1, 15));
    CHECK(one_row_integral({4, 2}, 5) == q(1, 105));
    CHECK(one_row_integral({}, 4) == q(1, 1));
    CHECK_THROWS_AS(one_row_integral({3}, 4), parity_error);
    for (long n = 2; n <= 12; ++n)
        for (long a = 0; a <= 12; a += 2)
            CHECK(one_row_integral({a}, n) ==
                  integral_oracle(ExponentMatrix({{a}}), n));
}

TEST_CASE("n=2 closed form with the parity sign") {
    CHECK(integral_n2(2, 0, 0, 2) == q(3, 8));
    CHECK(integral_n2(1, 1, 1, 1) == q(-1, 8));
    CHECK(integral_n2(2, 1, 0, 1) == q(0, 1));
    CHECK(integral_n2(0, 0, 0, 0) == q(1, 1));
    // against the oracle across a grid
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c)
                for (long d = 0; d <= 3; ++d)
                    CHECK(integral_n2(a, b, c, d) ==
                          integral_oracle(ExponentMatrix({{a, c}, {b, d}}), 2));
}

TEST_CASE("Phi conversion factor and round trip") {
    // I([[2],[2]]) = 1/15 at n=3 corresponds to Phi(2;2) = 4/15
    PhiValue phi = phi_from_integral(TwoRowSpec{{2}, {2}}, q(1, 15), 3);
    CHECK(phi.value == q(4, 15));
    CHECK(integral_from_phi(phi) == q(1, 15));
    // the spread-out variant picks up a flip: Phi(2,0;0,2) = 8/15
    PhiValue spread = phi_from_integral(TwoRowSpec{{2, 0}, {0, 2}}, q(2, 15), 3);
    CHECK(spread.value == q(8, 15));
    CHECK(integral_from_phi(spread) == q(2, 15));

    TwoRowSpec diag{{2}, {2}};
    CHECK(phi_from_integral(diag, integral_oracle(ExponentMatrix({{2}, {2}}), 5), 5)
              .value == q(16, 35));
    CHECK_THROWS_AS(phi_from_integral(TwoRowSpec{{1}, {1}}, q(0, 1), 3), parity_error);
}

TEST_CASE("one-row Phi") {
    CHECK(phi_one_row({2}, 3) == q(2, 3));
    CHECK(phi_one_row({}, 3) == q(1, 1));
    CHECK(phi_one_row({2, 2}, 3) == q(8, 15));
    // consistency with the conversion of the one-row integral
    for (long n = 2; n <= 8; ++n)
        for (long a = 0; a <= 8; a += 2) {
            PhiValue phi = phi_from_integral(TwoRowSpec{{a}, {0}},
                                             one_row_integral({a}, n), n);
            CHECK(phi_one_row({a}, n) == phi.value);
        }
}

TEST_CASE("elementary expansion coefficients K_r") {
    CHECK(expansion_coefficient(0, 1, 1) == q(1, 1));
    CHECK(expansion_coefficient(1, 1, 1) == q(2, 1));
    CHECK(expansion_coefficient(2, 2, 2) == q(8, 3));
    CHECK(expansion_coefficient(2, 2, 3) == q(8, 1));
    CHECK_THROWS_AS(expansion_coefficient(2, 1, 3), contract_error);
    CHECK_THROWS_AS(expansion_coefficient(-1, 1, 1), contract_error);
}

TEST_CASE("elementary Phi values and the one-column expansion") {
    CHECK(elementary_phi(0, 1, 0, 3) == q(2, 3));
    CHECK(elementary_phi(1, 0, 0, 3) == q(-2, 15));
    CHECK(elementary_phi(0, 0, 0, 3) == q(1, 1));
    // Phi(2a; 2b) = sum_r K_r(a, b) Phi(1^2r 2^(a-r) 0^(b-r); 1^2r 0^(a-r) 2^(b-r)),
    // with the right side's Phi values given in closed form by elementary_phi
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            for (long n : {3L, 4L, 5L, 7L}) {
                ExactRational sum(0);
                for (long r = 0; r <= std::min(a, b); ++r)
                    sum += expansion_coefficient(r, a, b) *
                           elementary_phi(r, a - r, b - r, n);
                CHECK(sum == phi_two_row({a}, {b}, n));
            }
}

TEST_CASE("two-row Phi formula anchors") {
    CHECK(phi_two_row({1}, {1}, 3) == q(4, 15));
    CHECK(phi_two_row({1}, {0}, 3) == q(2, 3));
    CHECK(phi_two_row({}, {}, 3) == q(1, 1));
    CHECK(phi_two_row({1}, {1}, 5) == q(16, 35));
    CHECK(phi_two_row({1, 1}, {1, 0}, 3) == q(32, 105));
}

TEST_CASE("two-row integrals match the oracle exhaustively at low degree") {
    CHECK(integral_two_row({1}, {1}, 3) == q(1, 15));
    CHECK(integral_two_row({2}, {0}, 3) == q(1, 5));
    CHECK(integral_two_row({1, 0}, {0, 1}, 3) == q(2, 15));
    for (long n : {2L, 3L, 4L, 6L})
        for (long a1 = 0; a1 <= 2; ++a1)
            for (long a2 = 0; a2 <= 2; ++a2)
                for (long b1 = 0; b1 <= 2; ++b1)
                    for (long b2 = 0; b2 <= 1; ++b2) {
                        if (a1 + a2 + b1 + b2 > 5) continue;
                        ExponentMatrix m({{2 * a1, 2 * a2}, {2 * b1, 2 * b2}});
                        CHECK(integral_two_row({a1, a2}, {b1, b2}, n) ==
                              integral_oracle(m, n));
                    }
}

TEST_CASE("triangular Phi") {
    CHECK(phi_triangular(0, 0, 0, 3) == q(1, 1));
    CHECK(phi_triangular(2, 2, 2, 3) == q(32, 105));
    CHECK(phi_triangular(2, 2, 2, 4) == q(25, 64));
    CHECK_THROWS_AS(phi_triangular(1, 2, 2, 3), parity_error);
    // agrees with the generic two-row formula
    for (long n : {2L, 3L, 5L})
        for (long a = 0; a <= 4; a += 2)
            for (long b = 0; b <= 4; b += 2)
                for (long c = 0; c <= 4; c += 2)
                    CHECK(phi_triangular(a, b, c, n) ==
                          phi_two_row({a / 2, c / 2}, {b / 2, 0}, n));
}

TEST_CASE("joint moments in generic position") {
    CHECK(joint_moments(2, 2, 3) == q(2, 15));
    CHECK(joint_moments(0, 0, 4) == q(1, 1));
    CHECK(joint_moments(1, 2, 4) == q(0, 1));
    CHECK(joint_moments(3, 1, 4) == q(0, 1));
    // equals I([[alpha, 0], [0, beta]])
    for (long n : {3L, 4L, 5L})
        for (long alpha = 0; alpha <= 6; alpha += 2)
            for (long beta = 0; beta <= 4; beta += 2)
                CHECK(joint_moments(alpha, beta, n) ==
                      integral_oracle(ExponentMatrix({{alpha, 0}, {0, beta}}), n));
}

TEST_CASE("two-row formula rejects n below 2") {
    CHECK_THROWS_AS(phi_two_row({1}, {1}, 1), domain_error);
    CHECK_THROWS_AS(phi_one_row({2}, 0), domain_error);
}
