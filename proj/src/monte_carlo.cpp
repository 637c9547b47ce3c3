#include "ortho/monte_carlo.hpp"

#include <algorithm>
#include <cmath>

namespace ortho {

namespace {

constexpr std::uint64_t kBatchSize = 8192;

// Normalizes column j in place; returns its pre-normalization norm.
double normalize_column(std::vector<double>& m, int n, int j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += m[i * n + j] * m[i * n + j];
    double norm = std::sqrt(s);
    for (int i = 0; i < n; ++i) m[i * n + j] /= norm;
    return norm;
}

void orthogonalize_against(std::vector<double>& m, int n, int j, int prev) {
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += m[i * n + prev] * m[i * n + j];
    for (int i = 0; i < n; ++i) m[i * n + j] -= dot * m[i * n + prev];
}

} // namespace

std::vector<double> haar_sample(int n, SplitMix64& rng) {
    if (n < 1) throw contract_error("haar_sample: n must be >= 1");
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (;;) {
        for (double& x : m) x = rng.next_gaussian();
        bool degenerate = false;
        for (int j = 0; j < n && !degenerate; ++j) {
            // Two Gram-Schmidt passes keep Q^T Q - Id at rounding level.
            for (int pass = 0; pass < 2; ++pass)
                for (int p = 0; p < j; ++p) orthogonalize_against(m, n, j, p);
            if (normalize_column(m, n, j) < 1e-8) degenerate = true;
        }
        if (!degenerate) return m;
        // Numerically rank-deficient draw (probability ~0); redraw.
    }
}

double orthogonality_defect(const std::vector<double>& q, int n) {
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += q[i * n + a] * q[i * n + b];
            worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    return worst;
}

McEstimate mc_integral(const ExponentMatrix& a, int n, std::uint64_t samples,
                       std::uint64_t seed) {
    if (samples < 1) throw contract_error("mc_integral: need samples >= 1");
    if (n < a.rows || n < a.cols)
        throw domain_error("mc_integral: n smaller than matrix dimensions");

    // Streaming mean/M2 per batch, merged in batch order (Chan et al.).
    double mean = 0.0, m2 = 0.0;
    std::uint64_t count = 0;

    std::uint64_t batches = (samples + kBatchSize - 1) / kBatchSize;
    for (std::uint64_t b = 0; b < batches; ++b) {
        SplitMix64 rng(derive_stream(seed, b));
        std::uint64_t in_batch = std::min(kBatchSize, samples - b * kBatchSize);
        double bmean = 0.0, bm2 = 0.0;
        for (std::uint64_t s = 0; s < in_batch; ++s) {
            std::vector<double> q = haar_sample(n, rng);
            double v = 1.0;
            for (int i = 0; i < a.rows; ++i)
                for (int j = 0; j < a.cols; ++j)
                    for (long t = 0; t < a.at(i, j); ++t) v *= q[i * n + j];
            double delta = v - bmean;
            bmean += delta / static_cast<double>(s + 1);
            bm2 += delta * (v - bmean);
        }
        double delta = bmean - mean;
        std::uint64_t total = count + in_batch;
        m2 += bm2 + delta * delta * static_cast<double>(count) *
                        static_cast<double>(in_batch) / static_cast<double>(total);
        mean += delta * static_cast<double>(in_batch) / static_cast<double>(total);
        count = total;
    }

    McEstimate est;
    est.mean = mean;
    est.samples = samples;
    est.seed = seed;
    est.standard_error =
        samples > 1 ? std::sqrt(m2 / (static_cast<double>(samples) - 1.0) /
                                static_cast<double>(samples))
                    : 0.0;
    return est;
}

} // namespace ortho
