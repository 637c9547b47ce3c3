#include "ortho/bareiss.hpp"

#include "ortho/errors.hpp"

namespace ortho {

std::optional<std::vector<ExactRational>>
bareiss_solve(std::vector<mpz_class> a, std::size_t m, std::vector<mpz_class> b) {
    if (a.size() != m * m || b.size() != m)
        throw contract_error("bareiss_solve: dimension mismatch");
    if (m == 0) return std::vector<ExactRational>{};

    // Augmented matrix [A | b], width m+1.
    const std::size_t w = m + 1;
    std::vector<mpz_class> M(m * w);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) M[i * w + j] = std::move(a[i * m + j]);
        M[i * w + m] = std::move(b[i]);
    }

    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        // First nonzero pivot, for a deterministic elimination order.
        std::size_t piv = k;
        while (piv < m && M[piv * w + k] == 0) ++piv;
        if (piv == m) return std::nullopt;
        if (piv != k)
            for (std::size_t j = k; j < w; ++j) std::swap(M[k * w + j], M[piv * w + j]);

        const mpz_class& pivot = M[k * w + k];
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < w; ++j) {
                // Bareiss update: every division here is exact.
                t = pivot * M[i * w + j] - M[i * w + k] * M[k * w + j];
                mpz_divexact(M[i * w + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i * w + k] = 0;
        }
        prev = pivot;
    }
    if (M[(m - 1) * w + (m - 1)] == 0) return std::nullopt;

    std::vector<ExactRational> x(m);
    for (std::size_t i = m; i-- > 0;) {
        ExactRational acc(M[i * w + m], 1);
        for (std::size_t j = i + 1; j < m; ++j)
            acc -= ExactRational(M[i * w + j], 1) * x[j];
        x[i] = acc / ExactRational(M[i * w + i], 1);
    }
    return x;
}

} // namespace ortho
