#include "ortho/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ortho/closed_forms.hpp"
#include "ortho/factorial.hpp"
#include "ortho/rng.hpp"
#include "ortho/two_by_two.hpp"
#include "ortho/weingarten.hpp"

namespace ortho {

namespace {

const std::map<PropertyId, std::string> kNames = {
    {PropertyId::Flipping, "flipping"},
    {PropertyId::Compression, "compression"},
    {PropertyId::BasicExtension, "basic-extension"},
    {PropertyId::RecursiveExtension, "recursive-extension"},
    {PropertyId::Transmutation, "transmutation"},
    {PropertyId::ElementaryFlip, "elementary-flip"},
    {PropertyId::TwoRowVsOracle, "two-row-vs-oracle"},
    {PropertyId::WeingartenElementary, "weingarten-elementary"},
    {PropertyId::N2VsOracle, "n2-vs-oracle"},
    {PropertyId::Asymptotic, "asymptotic"},
    {PropertyId::FSymmetry, "f-symmetry"},
    {PropertyId::ConjectureEven, "conjecture-even"},
    {PropertyId::ConjectureOdd, "conjecture-odd"},
};

std::string vec_str(const std::vector<long>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::vector<long> concat(std::vector<long> a, const std::vector<long>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Collects cases and mismatches; exact comparison only.
struct Sweep {
    VerificationReport rep;

    void check(const std::string& input, long n, const ExactRational& lhs,
               const ExactRational& rhs) {
        ++rep.cases;
        if (lhs != rhs) rep.failures.push_back({input, n, lhs.str(), rhs.str()});
    }

    void note(const std::string& what) { rep.notes.push_back(what); }

    void record_samples(const std::vector<long>& ns) {
        for (long n : ns)
            if (std::find(rep.n_samples.begin(), rep.n_samples.end(), n) ==
                rep.n_samples.end())
                rep.n_samples.push_back(n);
    }
};

// PIT points plus two extra, confirming the degree bound is not tight.
std::vector<long> pit_points(int k) {
    std::vector<long> pts = n_samples_for(std::max(k, 1));
    pts.push_back(pts.back() + 1);
    pts.push_back(pts.back() + 1);
    return pts;
}

std::vector<long> random_vector(SplitMix64& rng, std::size_t len, long max_entry) {
    std::vector<long> v(len);
    for (auto& x : v) x = static_cast<long>(rng.next_below(max_entry + 1));
    return v;
}

long sum_of(const std::vector<long>& v) {
    return std::accumulate(v.begin(), v.end(), 0L);
}

// ---- per-property routines ------------------------------------------------

void run_flipping(Sweep& sw, const VerifyBudget& budget, std::uint64_t seed) {
    long trials = budget.trials ? budget.trials : 40;
    int cap = budget.max_degree ? budget.max_degree : 8;
    SplitMix64 rng(seed);
    for (long t = 0, attempts = 0; t < trials && attempts < 20 * trials; ++attempts) {
        std::size_t p = 1 + rng.next_below(2), q = 1 + rng.next_below(2);
        auto a = random_vector(rng, p, 2), b = random_vector(rng, p, 2);
        auto c = random_vector(rng, q, 2), d = random_vector(rng, q, 2);
        long kappa = sum_of(a) + sum_of(b) + sum_of(c) + sum_of(d);
        if (kappa > cap) continue;
        ++t;
        auto ns = pit_points(static_cast<int>(kappa));
        sw.record_samples(ns);
        std::string input = "a=" + vec_str(a) + " b=" + vec_str(b) +
                            " c=" + vec_str(c) + " d=" + vec_str(d);
        for (long n : ns)
            sw.check(input, n, phi_two_row(concat(a, c), concat(b, d), n),
                     phi_two_row(concat(a, d), concat(b, c), n));
    }
}

void run_compression(Sweep& sw, const VerifyBudget& budget, std::uint64_t seed) {
    long trials = budget.trials ? budget.trials : 40;
    int cap = budget.max_degree ? budget.max_degree : 8;
    SplitMix64 rng(seed);
    for (long t = 0, attempts = 0; t < trials && attempts < 20 * trials; ++attempts) {
        std::size_t p = 1 + rng.next_below(2), q = 1 + rng.next_below(3);
        auto a = random_vector(rng, p, 2), b = random_vector(rng, p, 2);
        auto c = random_vector(rng, q, 3);
        long kappa = sum_of(a) + sum_of(b) + sum_of(c);
        if (kappa > cap) continue;
        ++t;
        auto ns = pit_points(static_cast<int>(kappa));
        sw.record_samples(ns);
        std::string input = "a=" + vec_str(a) + " b=" + vec_str(b) + " c=" + vec_str(c);
        std::vector<long> zeros_q(q, 0);
        for (long n : ns)
            sw.check(input, n, phi_two_row(concat(a, c), concat(b, zeros_q), n),
                     phi_two_row(concat(a, {sum_of(c)}), concat(b, {0}), n));
    }
}

void run_basic_extension(Sweep& sw, const VerifyBudget& budget, std::uint64_t seed) {
    long trials = budget.trials ? budget.trials : 40;
    int cap = budget.max_degree ? budget.max_degree : 8;
    SplitMix64 rng(seed);
    for (long t = 0, attempts = 0; t < trials && attempts < 20 * trials; ++attempts) {
        std::size_t q = 1 + rng.next_below(3);
        auto ha = random_vector(rng, q, 2), hb = random_vector(rng, q, 2);
        long kappa = sum_of(ha) + sum_of(hb) + 1;
        if (kappa > cap) continue;
        ++t;
        auto ns = pit_points(static_cast<int>(kappa));
        sw.record_samples(ns);
        std::string input = "a=" + vec_str(ha) + " b=" + vec_str(hb) + " (half exponents)";
        long sum_a = 2 * sum_of(ha);
        for (long n : ns) {
            if (n == static_cast<long>(q)) continue; // pole of the recurrence
            ExactRational lhs = phi_two_row(concat(ha, {1}), concat(hb, {0}), n);
            ExactRational rhs = ExactRational(sum_a + n - 1) * phi_two_row(ha, hb, n);
            for (std::size_t s = 0; s < q; ++s) {
                auto bumped = ha;
                bumped[s] += 1;
                rhs -= ExactRational(2 * ha[s] + 1) * phi_two_row(bumped, hb, n);
            }
            rhs /= ExactRational(n - static_cast<long>(q));
            sw.check(input, n, lhs, rhs);
        }
    }
}

void run_recursive_extension(Sweep& sw, const VerifyBudget& budget, std::uint64_t seed) {
    long trials = budget.trials ? budget.trials : 40;
    int cap = budget.max_degree ? budget.max_degree : 8;
    SplitMix64 rng(seed);
    for (long t = 0, attempts = 0; t < trials && attempts < 20 * trials; ++attempts) {
        std::size_t q = 1 + rng.next_below(3);
        auto ha = random_vector(rng, q, 2), hb = random_vector(rng, q, 2);
        long hc = static_cast<long>(rng.next_below(3));
        long kappa = sum_of(ha) + sum_of(hb) + hc + 1;
        if (kappa > cap) continue;
        ++t;
        auto ns = pit_points(static_cast<int>(kappa));
        sw.record_samples(ns);
        std::string input = "a=" + vec_str(ha) + " b=" + vec_str(hb) +
                            " c=" + std::to_string(2 * hc) + " (half exponents)";
        long c = 2 * hc;
        long sum_a = 2 * sum_of(ha);
        for (long n : ns) {
            if (n + c - static_cast<long>(q) == 0) continue;
            ExactRational lhs = phi_two_row(concat(ha, {hc + 1}), concat(hb, {0}), n);
            ExactRational rhs = ExactRational(sum_a + c + n - 1) *
                                phi_two_row(concat(ha, {hc}), concat(hb, {0}), n);
            for (std::size_t s = 0; s < q; ++s) {
                auto bumped = ha;
                bumped[s] += 1;
                rhs -= ExactRational(2 * ha[s] + 1) *
                       phi_two_row(concat(bumped, {hc}), concat(hb, {0}), n);
            }
            rhs /= ExactRational(n + c - static_cast<long>(q));
            sw.check(input, n, lhs, rhs);
        }
    }
}

void run_transmutation(Sweep& sw, const VerifyBudget& budget, std::uint64_t seed) {
    long trials = budget.trials ? budget.trials : 40;
    int cap = budget.max_degree ? budget.max_degree : 8;
    SplitMix64 rng(seed);
    for (long t = 0, attempts = 0; t < trials && attempts < 20 * trials; ++attempts) {
        std::size_t q = 1 + rng.next_below(3);
        auto ha = random_vector(rng, q, 2), hb = random_vector(rng, q, 2);
        long hc = static_cast<long>(rng.next_below(4));
        long kappa = sum_of(ha) + sum_of(hb) + hc;
        if (kappa > cap) continue;
        ++t;
        auto ns = pit_points(static_cast<int>(kappa) + 1);
        sw.record_samples(ns);
        std::string input = "a=" + vec_str(ha) + " b=" + vec_str(hb) +
                            " c=" + std::to_string(2 * hc) + " (half exponents)";
        long c = 2 * hc;
        for (long n : ns) {
            // Basic form: one (2;0) column trades for an n -> n+2 shift.
            sw.check(input + " basic", n,
                     phi_two_row(concat(ha, {1}), concat(hb, {0}), n),
                     ExactRational(n - 1, n) * phi_two_row(ha, hb, n + 2));
            // General form with the double-factorial prefactor.
            ExactRational factor(
                paper_double_factorial(n - 1) * paper_double_factorial(c + n - 2),
                paper_double_factorial(n - 2) * paper_double_factorial(c + n - 1));
            sw.check(input + " general", n,
                     phi_two_row(concat(ha, {hc}), concat(hb, {0}), n),
                     factor * phi_two_row(ha, hb, n + c));
        }
    }
}

void run_elementary_flip(Sweep& sw, const VerifyBudget& budget, std::uint64_t) {
    long rmax = 3, smax = budget.max_degree ? budget.max_degree : 5;
    for (long r = 0; r <= rmax; ++r)
        for (long s = 0; s <= smax; ++s) {
            auto ns = pit_points(static_cast<int>(2 * r + s));
            sw.record_samples(ns);
            for (long a = 0; a <= s; ++a) {
                std::string input = "r=" + std::to_string(r) + " (a,b)=(" +
                                    std::to_string(a) + "," + std::to_string(s - a) +
                                    ") vs (" + std::to_string(s) + ",0)";
                for (long n : ns)
                    sw.check(input, n, elementary_phi(r, a, s - a, n),
                             elementary_phi(r, s, 0, n));
            }
        }
}

// All two-row all-even exponent matrices with total degree <= 2*kappa_max,
// as nonincreasing column multisets (column order never changes I).
std::vector<std::vector<std::pair<long, long>>> even_two_row_cases(int kappa_max) {
    std::vector<std::pair<long, long>> columns;
    for (long s = 2; s <= 2 * kappa_max; s += 2)
        for (long x = s; x >= 0; x -= 2) columns.emplace_back(x, s - x);
    std::sort(columns.rbegin(), columns.rend());

    std::vector<std::vector<std::pair<long, long>>> out;
    std::vector<std::pair<long, long>> cur;
    auto rec = [&](auto&& self, std::size_t from, long rest) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (std::size_t i = from; i < columns.size(); ++i) {
            long w = columns[i].first + columns[i].second;
            if (w > rest) continue;
            cur.push_back(columns[i]);
            self(self, i, rest - w);
            cur.pop_back();
        }
    };
    rec(rec, 0, 2L * kappa_max);
    return out;
}

void run_two_row_vs_oracle(Sweep& sw, const VerifyBudget& budget, std::uint64_t) {
    int kappa_max = budget.max_degree ? budget.max_degree : 5;
    for (const auto& cols : even_two_row_cases(kappa_max)) {
        std::vector<long> top, bottom, half_top, half_bottom;
        for (auto [x, y] : cols) {
            top.push_back(x);
            bottom.push_back(y);
            half_top.push_back(x / 2);
            half_bottom.push_back(y / 2);
        }
        ExponentMatrix a(std::vector<std::vector<long>>{top, bottom});
        long kappa = a.total_degree() / 2;
        std::string input = a.str();
        long n_lo = budget.n_lo ? budget.n_lo : kappa + 1;
        long n_hi = budget.n_hi ? budget.n_hi : kappa + 4;
        for (long n = n_lo; n <= n_hi; ++n) {
            try {
                sw.check(input, n, integral_two_row(half_top, half_bottom, n),
                         integral_oracle(a, n));
            } catch (const std::runtime_error& e) {
                sw.note(input + " n=" + std::to_string(n) + ": " + e.what());
            }
        }
    }
}

void run_weingarten_elementary(Sweep& sw, const VerifyBudget& budget, std::uint64_t) {
    // The point of this property is the dual route: a dense fraction-free
    // solve per entry against the oracle's class-collapsed contraction. The
    // per-entry dense solve is cubic in (2k-1)!!, so k stays at most 3.
    int kmax = budget.max_degree ? std::min(budget.max_degree, 3) : 3;
    for (int k = 1; k <= kmax; ++k) {
        auto pairings = enumerate_pairings(k);
        for (long n : {4L, 5L, 6L})
            for (const auto& p : pairings)
                for (const auto& s : pairings) {
                    std::string input = "k=" + std::to_string(k) + " pi=" + p.str() +
                                        " sigma=" + s.str();
                    sw.check(input, n, weingarten_entry(k, n, p, s),
                             integral_oracle(elementary_matrix_of(p, s), n));
                }
    }
    sw.record_samples({4, 5, 6});
}

void run_n2_vs_oracle(Sweep& sw, const VerifyBudget&, std::uint64_t) {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; a + b <= 4; ++b)
            for (long c = 0; a + b + c <= 4; ++c) {
                long d = 4 - a - b - c;
                std::string input = Quad{a, b, c, d}.str();
                try {
                    sw.check(input, 2, integral_n2(a, b, c, d),
                             integral_oracle(ExponentMatrix({{a, c}, {b, d}}), 2));
                } catch (const std::runtime_error& e) {
                    sw.note(input + ": " + e.what());
                }
            }
    sw.record_samples({2});
}

void run_asymptotic(Sweep& sw, const VerifyBudget&, std::uint64_t) {
    const std::vector<ExponentMatrix> cases = {
        ExponentMatrix(std::vector<std::vector<long>>{{4}}),
        ExponentMatrix(std::vector<std::vector<long>>{{2, 2}}),
        ExponentMatrix(std::vector<std::vector<long>>{{2, 0}, {0, 2}}),
    };
    const std::vector<long> ns = {10, 20, 40, 80};
    sw.record_samples(ns);
    for (const auto& a : cases) {
        long kappa = a.total_degree() / 2;
        mpz_class limit = 1;
        for (long e : a.entries) limit *= paper_double_factorial(e);
        std::vector<ExactRational> err;
        for (long n : ns) {
            mpz_class nk;
            mpz_class base(n);
            mpz_pow_ui(nk.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(kappa));
            err.push_back((ExactRational(nk) * integral_oracle(a, n) -
                           ExactRational(limit)).abs());
        }
        // |err| should halve (within a factor of 2) with each doubling of n.
        for (std::size_t i = 0; i + 1 < err.size(); ++i) {
            std::string input = a.str() + " n=" + std::to_string(ns[i]) + "->" +
                                std::to_string(ns[i + 1]);
            ++sw.rep.cases;
            bool ok;
            if (err[i].is_zero())
                ok = err[i + 1].is_zero();
            else
                ok = err[i + 1] <= err[i] && err[i] <= ExactRational(4) * err[i + 1];
            if (!ok)
                sw.rep.failures.push_back(
                    {input, ns[i], err[i].str(), err[i + 1].str()});
        }
    }
}

void for_each_sorted_quad(long lo, long hi, long step, long max_sum,
                          const std::function<void(const Quad&)>& fn) {
    for (long a = lo; a <= hi; a += step)
        for (long b = a; b <= hi; b += step)
            for (long c = b; c <= hi; c += step)
                for (long d = c; d <= hi; d += step)
                    if (a + b + c + d <= max_sum) fn(Quad{a, b, c, d});
}

void run_f_symmetry(Sweep& sw, const VerifyBudget& budget, std::uint64_t) {
    long even_max = budget.max_degree ? budget.max_degree : 4;
    sw.record_samples({3, 4, 5});
    for_each_sorted_quad(0, even_max, 2, 4 * even_max, [&](const Quad& q) {
        for (long n : {3L, 4L, 5L}) {
            ExactRational ref = f_value(q, n);
            long perm[4] = {q.a, q.b, q.c, q.d};
            std::sort(perm, perm + 4);
            do {
                Quad p{perm[0], perm[1], perm[2], perm[3]};
                sw.check("even " + q.str() + " vs " + p.str(), n, f_value(p, n), ref);
            } while (std::next_permutation(perm, perm + 4));
        }
    });
    for_each_sorted_quad(1, 7, 2, 10, [&](const Quad& q) {
        for (long n : {4L, 5L}) {
            try {
                ExactRational ref = f_value(q, n);
                long perm[4] = {q.a, q.b, q.c, q.d};
                std::sort(perm, perm + 4);
                do {
                    Quad p{perm[0], perm[1], perm[2], perm[3]};
                    sw.check("odd " + q.str() + " vs " + p.str(), n, f_value(p, n), ref);
                } while (std::next_permutation(perm, perm + 4));
            } catch (const std::runtime_error& e) {
                sw.note("odd " + q.str() + " n=" + std::to_string(n) + ": " + e.what());
            }
        }
    });
}

void run_conjecture_even(Sweep& sw, const VerifyBudget& budget, std::uint64_t) {
    long max_entry = budget.max_degree ? budget.max_degree : 6;
    long n_lo = budget.n_lo ? budget.n_lo : 4;
    long n_hi = budget.n_hi ? budget.n_hi : 8;
    for (long n = n_lo; n <= n_hi; ++n) sw.rep.n_samples.push_back(n);
    for_each_sorted_quad(0, max_entry, 2, 4 * max_entry, [&](const Quad& q) {
        for (long n = n_lo; n <= n_hi; ++n)
            sw.check(q.str(), n, conjecture_even_sum(q, n), f_value(q, n));
    });
}

void run_conjecture_odd(Sweep& sw, const VerifyBudget& budget, std::uint64_t) {
    long max_sum = budget.max_degree ? budget.max_degree : 10;
    long n_lo = budget.n_lo ? budget.n_lo : 4;
    long n_hi = budget.n_hi ? budget.n_hi : 8;
    for (long n = n_lo; n <= n_hi; ++n) sw.rep.n_samples.push_back(n);
    for_each_sorted_quad(1, max_sum - 3, 2, max_sum, [&](const Quad& q) {
        for (long n = n_lo; n <= n_hi; ++n) {
            try {
                sw.check(q.str(), n, conjecture_odd_sum(q, n), f_value(q, n));
            } catch (const std::runtime_error& e) {
                sw.note(q.str() + " n=" + std::to_string(n) + ": " + e.what());
            }
        }
    });
}

} // namespace

std::string property_name(PropertyId id) { return kNames.at(id); }

std::optional<PropertyId> property_from_name(const std::string& name) {
    for (const auto& [id, nm] : kNames)
        if (nm == name) return id;
    return std::nullopt;
}

std::vector<PropertyId> all_properties() {
    std::vector<PropertyId> out;
    for (const auto& [id, nm] : kNames) out.push_back(id);
    return out;
}

std::vector<long> n_samples_for(int k) {
    if (k < 1) throw contract_error("n_samples_for: k must be >= 1");
    int degree_bound = 2 * k + 2;
    std::vector<long> out;
    for (long n = k + 1; n <= k + degree_bound + 2; ++n) out.push_back(n);
    return out;
}

VerificationReport verify(PropertyId property, VerifyBudget budget,
                          std::uint64_t seed) {
    Sweep sw;
    sw.rep.property = property_name(property);
    auto start = std::chrono::steady_clock::now();
    switch (property) {
        case PropertyId::Flipping: run_flipping(sw, budget, seed); break;
        case PropertyId::Compression: run_compression(sw, budget, seed); break;
        case PropertyId::BasicExtension: run_basic_extension(sw, budget, seed); break;
        case PropertyId::RecursiveExtension: run_recursive_extension(sw, budget, seed); break;
        case PropertyId::Transmutation: run_transmutation(sw, budget, seed); break;
        case PropertyId::ElementaryFlip: run_elementary_flip(sw, budget, seed); break;
        case PropertyId::TwoRowVsOracle: run_two_row_vs_oracle(sw, budget, seed); break;
        case PropertyId::WeingartenElementary: run_weingarten_elementary(sw, budget, seed); break;
        case PropertyId::N2VsOracle: run_n2_vs_oracle(sw, budget, seed); break;
        case PropertyId::Asymptotic: run_asymptotic(sw, budget, seed); break;
        case PropertyId::FSymmetry: run_f_symmetry(sw, budget, seed); break;
        case PropertyId::ConjectureEven: run_conjecture_even(sw, budget, seed); break;
        case PropertyId::ConjectureOdd: run_conjecture_odd(sw, budget, seed); break;
    }
    std::sort(sw.rep.failures.begin(), sw.rep.failures.end(),
              [](const Failure& a, const Failure& b) {
                  return std::tie(a.input, a.n) < std::tie(b.input, b.n);
              });
    auto end = std::chrono::steady_clock::now();
    sw.rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return sw.rep;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures)
        fs.push_back({{"input", f.input}, {"n", f.n}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return nlohmann::json{{"property", property},
                          {"status", passed() ? "PASS" : "FAIL"},
                          {"cases", cases},
                          {"failures", fs},
                          {"notes", notes},
                          {"n_samples", n_samples},
                          {"elapsed_ms", elapsed_ms}};
}

std::string VerificationReport::to_csv() const {
    std::ostringstream out;
    out << "case,n,lhs,rhs,status\n";
    for (const auto& f : failures)
        out << '"' << f.input << "\"," << f.n << ',' << f.lhs << ',' << f.rhs
            << ",FAIL\n";
    out << "\"" << property << " (" << cases << " cases)\",,,,"
        << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace ortho
