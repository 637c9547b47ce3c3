#include "ortho/two_by_two.hpp"

#include <algorithm>

#include "ortho/closed_forms.hpp"
#include "ortho/factorial.hpp"

namespace ortho {

namespace {

void check_nonneg(const Quad& q, const char* who) {
    if (q.a < 0 || q.b < 0 || q.c < 0 || q.d < 0)
        throw contract_error(std::string(who) + ": negative exponent");
}

mpz_class denominator_pdf(const Quad& q, long n) {
    return paper_double_factorial(q.a + q.d + n - 2) *
           paper_double_factorial(q.b + q.c + n - 2);
}

} // namespace

ExactRational f_value(const Quad& q, long n, int oracle_limit) {
    check_nonneg(q, "f_value");
    if (n < 2) throw domain_error("f_value: n must be >= 2");
    ExactRational integral;
    switch (q.parity()) {
        case Quad::Parity::Mixed:
            return ExactRational(0);
        case Quad::Parity::AllEven:
            integral = integral_two_row({q.a / 2, q.c / 2}, {q.b / 2, q.d / 2}, n);
            break;
        case Quad::Parity::AllOdd:
            integral = integral_oracle(
                ExponentMatrix({{q.a, q.c}, {q.b, q.d}}), n, oracle_limit);
            break;
    }
    return integral / ExactRational(denominator_pdf(q, n));
}

mpz_class quantity_S(long k, const Quad& q) {
    return mpz_class(q.a + k) * (q.b + k) * (q.c + k) * (q.d + k);
}

mpz_class quantity_F(long k, const Quad& q) {
    return paper_double_factorial(q.a + k) * paper_double_factorial(q.b + k) *
           paper_double_factorial(q.c + k) * paper_double_factorial(q.d + k);
}

mpz_class quantity_P(long k, const Quad& q) {
    return paper_double_factorial(q.a + q.b + q.c + q.d + k);
}

ExactRational f_triangular(long a, long b, long c, long n) {
    if (n < 3) throw domain_error("f_triangular: n must be >= 3");
    if (a % 2 != 0 || b % 2 != 0 || c % 2 != 0)
        throw parity_error("f_triangular: entries must be even");
    Quad q{a, b, c, 0};
    check_nonneg(q, "f_triangular");
    mpz_class num = factorial(n - 2) * paper_double_factorial(n - 2) * quantity_F(0, q);
    mpz_class den = quantity_P(n - 1, q) * quantity_F(n - 2, q);
    return ExactRational(num, den);
}

ExactRational conjecture_even_sum(const Quad& q, long n) {
    check_nonneg(q, "conjecture_even_sum");
    if (q.parity() != Quad::Parity::AllEven)
        throw parity_error("conjecture_even_sum: quad must be all even");
    if (n <= 3) throw domain_error("conjecture_even_sum: n must be >= 4");

    ExactRational prefactor(
        factorial(n - 2) * paper_double_factorial(n - 2) * quantity_F(0, q),
        quantity_P(n - 1, q) * quantity_F(n - 2, q));

    long rmax = std::min({q.a, q.b, q.c, q.d}) / 2;
    ExactRational sum(0);
    // Running products S_0 S_{-2} ... / S_{n-1} S_{n+1} ..., empty at r=0.
    mpz_class s_num = 1, s_den = 1;
    for (long r = 0; r <= rmax; ++r) {
        if (r > 0) {
            s_num *= quantity_S(-2 * (r - 1), q);
            s_den *= quantity_S(n - 1 + 2 * (r - 1), q);
        }
        ExactRational term(mpz_class(n + 4 * r - 3) * binomial(n + 2 * r - 4, 2 * r) * s_num,
                           mpz_class(n - 3) * s_den);
        sum += term;
    }
    return prefactor * sum;
}

ExactRational conjecture_odd_sum(const Quad& q, long n) {
    check_nonneg(q, "conjecture_odd_sum");
    if (q.parity() != Quad::Parity::AllOdd)
        throw parity_error("conjecture_odd_sum: quad must be all odd");
    if (n <= 3) throw domain_error("conjecture_odd_sum: n must be >= 4");

    ExactRational prefactor(
        factorial(n - 2) * paper_double_factorial(n) * quantity_F(1, q),
        quantity_P(n - 1, q) * quantity_F(n - 1, q));
    prefactor = -prefactor;

    long rmax = (std::min({q.a, q.b, q.c, q.d}) - 1) / 2;
    ExactRational sum(0);
    mpz_class s_num = 1, s_den = 1;
    for (long r = 0; r <= rmax; ++r) {
        if (r > 0) {
            s_num *= quantity_S(-1 - 2 * (r - 1), q);
            s_den *= quantity_S(n + 2 * (r - 1), q);
        }
        ExactRational term(mpz_class(n + 4 * r - 1) * binomial(n + 2 * r - 3, 2 * r + 1) * s_num,
                           mpz_class(n - 1) * (n - 3) * s_den);
        sum += term;
    }
    return prefactor * sum;
}

} // namespace ortho
