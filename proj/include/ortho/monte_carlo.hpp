#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "ortho/exponent_matrix.hpp"
#include "ortho/rng.hpp"

namespace ortho {

// Monte Carlo estimate of an integral, reproducible from (seed, samples, n, a).
struct McEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const {
        return nlohmann::json{{"mean", mean},
                              {"stderr", standard_error},
                              {"samples", samples},
                              {"seed", seed}};
    }
};

// One Haar-distributed n x n orthogonal matrix, row-major. Gaussian fill
// followed by Gram-Schmidt with reorthogonalization and positive
// normalization; the positive-diagonal QR convention is exactly the sign
// correction that makes the output Haar rather than biased.
std::vector<double> haar_sample(int n, SplitMix64& rng);

// max |Q^T Q - Id| entry, for orthogonality checks.
double orthogonality_defect(const std::vector<double>& q, int n);

// Sample mean and standard error of prod u_ij^{a_ij} over independent Haar
// samples. Samples are drawn in fixed-size batches with per-batch derived
// streams and merged in batch order, so the estimate is deterministic.
McEstimate mc_integral(const ExponentMatrix& a, int n, std::uint64_t samples,
                       std::uint64_t seed);

} // namespace ortho
