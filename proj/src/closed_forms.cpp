#include "ortho/closed_forms.hpp"

#include <algorithm>
#include <numeric>

#include "ortho/factorial.hpp"

namespace ortho {

namespace {

using ::ortho::paper_double_factorial;

long checked_even_sum(const std::vector<long>& v, const char* who) {
    long s = 0;
    for (long x : v) {
        if (x < 0) throw contract_error(std::string(who) + ": negative entry");
        if (x % 2 != 0) throw parity_error(std::string(who) + ": odd entry");
        s += x;
    }
    return s;
}

void check_n(long n, const char* who) {
    if (n < 2) throw domain_error(std::string(who) + ": n must be >= 2");
}

ExactRational pdf_ratio(long num, long den) {
    return ExactRational(paper_double_factorial(num), paper_double_factorial(den));
}

} // namespace

ExactRational one_row_integral(const std::vector<long>& a, long n) {
    check_n(n, "one_row_integral");
    long s = checked_even_sum(a, "one_row_integral");
    mpz_class num = paper_double_factorial(n - 1);
    for (long x : a) num *= paper_double_factorial(x);
    return ExactRational(num, paper_double_factorial(s + n - 1));
}

ExactRational integral_n2(long a, long b, long c, long d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw contract_error("integral_n2: negative exponent");
    int odd = (a % 2) + (b % 2) + (c % 2) + (d % 2);
    if (odd != 0 && odd != 4) return ExactRational(0);
    int eps = odd == 0 ? 1 : -1;
    mpz_class num = eps * paper_double_factorial(a + d) * paper_double_factorial(b + c);
    return ExactRational(num, paper_double_factorial(a + b + c + d + 1));
}

namespace {

// pdf(Sa+n-2) pdf(Sb+n-2) / (pdf(n-2)^2 prod pdf(a_i) prod pdf(b_i))
ExactRational phi_conversion_factor(const TwoRowSpec& spec, long n) {
    check_n(n, "phi conversion");
    if (spec.a.size() != spec.b.size())
        throw contract_error("phi conversion: |a| != |b|");
    long sa = checked_even_sum(spec.a, "phi conversion");
    long sb = checked_even_sum(spec.b, "phi conversion");
    mpz_class num = paper_double_factorial(sa + n - 2) * paper_double_factorial(sb + n - 2);
    mpz_class den = paper_double_factorial(n - 2) * paper_double_factorial(n - 2);
    for (long x : spec.a) den *= paper_double_factorial(x);
    for (long x : spec.b) den *= paper_double_factorial(x);
    return ExactRational(num, den);
}

} // namespace

PhiValue phi_from_integral(const TwoRowSpec& spec, const ExactRational& integral, long n) {
    return PhiValue{integral * phi_conversion_factor(spec, n), n, spec};
}

ExactRational integral_from_phi(const PhiValue& phi) {
    return phi.value / phi_conversion_factor(phi.spec, phi.n);
}

ExactRational phi_one_row(const std::vector<long>& a, long n) {
    check_n(n, "phi_one_row");
    long s = checked_even_sum(a, "phi_one_row");
    return pdf_ratio(n - 1, n - 2) * pdf_ratio(s + n - 2, s + n - 1);
}

ExactRational expansion_coefficient(long r, long a, long b) {
    if (r < 0 || a < 0 || b < 0 || r > std::min(a, b))
        throw contract_error("expansion_coefficient: need 0 <= r <= min(a,b)");
    mpz_class num = factorial(a) * factorial(b);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * r));
    mpz_class den = factorial(2 * r) * factorial(a - r) * factorial(b - r);
    return ExactRational(num, den);
}

ExactRational elementary_phi(long r, long a, long b, long n) {
    check_n(n, "elementary_phi");
    if (r < 0 || a < 0 || b < 0) throw contract_error("elementary_phi: negative argument");
    ExactRational out = pdf_ratio(n - 1, n - 2);
    mpz_class num = paper_double_factorial(2 * r) *
                    paper_double_factorial(2 * a + 2 * b + 2 * r + n - 2);
    out *= ExactRational(num, paper_double_factorial(2 * a + 2 * b + 4 * r + n - 1));
    return (r % 2 == 0) ? out : -out;
}

ExactRational phi_two_row(const std::vector<long>& half_a,
                          const std::vector<long>& half_b, long n) {
    check_n(n, "phi_two_row");
    if (half_a.size() != half_b.size())
        throw contract_error("phi_two_row: |a| != |b|");
    std::size_t q = half_a.size();
    for (std::size_t i = 0; i < q; ++i)
        if (half_a[i] < 0 || half_b[i] < 0)
            throw contract_error("phi_two_row: negative entry");

    long big_s = std::accumulate(half_a.begin(), half_a.end(), 0L) +
                 std::accumulate(half_b.begin(), half_b.end(), 0L);

    // Odometer over r_i = 0..min(a_i, b_i).
    std::vector<long> r(q, 0);
    ExactRational sum(0);
    for (;;) {
        long big_r = std::accumulate(r.begin(), r.end(), 0L);
        ExactRational term(1);
        for (std::size_t i = 0; i < q; ++i)
            term *= expansion_coefficient(r[i], half_a[i], half_b[i]);
        mpz_class num = paper_double_factorial(2 * big_r) *
                        paper_double_factorial(2 * big_s - 2 * big_r + n - 2);
        term *= ExactRational(num, paper_double_factorial(2 * big_s + n - 1));
        if (big_r % 2 != 0) term = -term;
        sum += term;

        std::size_t i = 0;
        while (i < q && r[i] == std::min(half_a[i], half_b[i])) r[i++] = 0;
        if (i == q) break;
        ++r[i];
    }
    return pdf_ratio(n - 1, n - 2) * sum;
}

ExactRational integral_two_row(const std::vector<long>& half_a,
                               const std::vector<long>& half_b, long n) {
    TwoRowSpec spec;
    for (long x : half_a) spec.a.push_back(2 * x);
    for (long x : half_b) spec.b.push_back(2 * x);
    return integral_from_phi(PhiValue{phi_two_row(half_a, half_b, n), n, spec});
}

ExactRational phi_triangular(long a, long b, long c, long n) {
    check_n(n, "phi_triangular");
    checked_even_sum({a, b, c}, "phi_triangular");
    mpz_class num = paper_double_factorial(a + c + n - 2) *
                    paper_double_factorial(b + c + n - 2);
    mpz_class den = paper_double_factorial(c + n - 2) *
                    paper_double_factorial(a + b + c + n - 1);
    return pdf_ratio(n - 1, n - 2) * ExactRational(num, den);
}

ExactRational joint_moments(long alpha, long beta, long n) {
    check_n(n, "joint_moments");
    if (alpha < 0 || beta < 0) throw contract_error("joint_moments: negative exponent");
    if (alpha % 2 != 0 || beta % 2 != 0) return ExactRational(0);
    mpz_class num = factorial(n - 2) * paper_double_factorial(alpha) *
                    paper_double_factorial(beta) *
                    paper_double_factorial(alpha + beta + n - 2);
    mpz_class den = paper_double_factorial(alpha + n - 2) *
                    paper_double_factorial(beta + n - 2) *
                    paper_double_factorial(alpha + beta + n - 1);
    return ExactRational(num, den);
}

} // namespace ortho
