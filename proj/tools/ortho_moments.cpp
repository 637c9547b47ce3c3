#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ortho/closed_forms.hpp"
#include "ortho/errors.hpp"
#include "ortho/monte_carlo.hpp"
#include "ortho/parse.hpp"
#include "ortho/two_by_two.hpp"
#include "ortho/verify.hpp"
#include "ortho/weingarten.hpp"

namespace {

using nlohmann::json;
using namespace ortho;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 3;
constexpr int kExitDomain = 4;

int oracle_limit_from_env() {
    if (const char* v = std::getenv("ORTHO_MOMENTS_LIMIT_K")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw domain_error("ORTHO_MOMENTS_LIMIT_K is not an integer");
        }
    }
    return kDefaultOracleLimit;
}

void print_value(const ExactRational& v, const std::string& label, long n, long k,
                 const std::string& method, bool as_json) {
    if (as_json) {
        json out{{"value", v.to_json()}, {"method", method}, {"n", n}, {"k", k}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << label << " = " << v.str() << "\n";
    }
}

int run_integral(const std::string& matrix_text, long n, std::string method,
                 bool as_json) {
    ExponentMatrix a = parse_matrix(matrix_text);
    int limit = oracle_limit_from_env();
    long k = a.total_degree() / 2;

    bool all_even = true;
    for (long e : a.entries) all_even = all_even && e % 2 == 0;

    if (method == "auto") {
        if (a.rows <= 2 && all_even)
            method = "closed";
        else if (k <= limit && a.total_degree() % 2 == 0)
            method = "oracle";
        else if (a.total_degree() % 2 != 0 || !admissible(a))
            method = "oracle"; // vanishes without a solve
        else {
            std::cerr << "warning: degree k=" << k << " exceeds the exact limit "
                      << limit << "; falling back to Monte Carlo\n";
            method = "mc";
        }
    }

    if (method == "closed") {
        ExactRational v;
        if (a.empty() || a.total_degree() == 0)
            v = ExactRational(1);
        else if (!admissible(a))
            v = ExactRational(0);
        else if (a.rows == 1) {
            std::vector<long> row(a.entries);
            v = one_row_integral(row, n);
        } else if (a.rows == 2 && all_even) {
            std::vector<long> ht, hb;
            for (int j = 0; j < a.cols; ++j) {
                ht.push_back(a.at(0, j) / 2);
                hb.push_back(a.at(1, j) / 2);
            }
            v = integral_two_row(ht, hb, n);
        } else {
            throw domain_error(
                "closed form requires at most two rows with even entries");
        }
        print_value(v, "I(" + a.str() + ")", n, k, "closed", as_json);
        return kExitOk;
    }
    if (method == "oracle") {
        ExactRational v = integral_oracle(a, n, limit);
        print_value(v, "I(" + a.str() + ")", n, k, "oracle", as_json);
        return kExitOk;
    }
    if (method == "mc") {
        McEstimate est = mc_integral(a, static_cast<int>(n), 1000000, 1);
        if (as_json) {
            json out = est.to_json();
            out["method"] = "mc";
            out["n"] = n;
            out["k"] = k;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "I(" << a.str() << ") ~ " << est.mean << " +/- "
                      << est.standard_error << "\n";
        }
        return kExitOk;
    }
    throw domain_error("unknown method: " + method);
}

int run_weingarten(int k, long n, const std::vector<std::string>& entry,
                   bool as_json) {
    if (!entry.empty()) {
        Pairing p = parse_pairing(entry.at(0));
        Pairing s = parse_pairing(entry.at(1));
        ExactRational v = weingarten_entry(k, n, p, s);
        if (as_json) {
            json out{{"value", v.to_json()},
                     {"k", k},
                     {"n", n},
                     {"pi", p.str()},
                     {"sigma", s.str()}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "W(" << p.str() << ", " << s.str() << ") = " << v.str()
                      << "\n";
        }
        return kExitOk;
    }
    auto pairings = enumerate_pairings(k);
    auto w = weingarten_matrix(k, n);
    if (as_json) {
        json rows = json::array();
        for (const auto& row : w) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.to_json());
            rows.push_back(r);
        }
        json order = json::array();
        for (const auto& p : pairings) order.push_back(p.str());
        std::cout << json{{"k", k}, {"n", n}, {"order", order}, {"entries", rows}}.dump()
                  << "\n";
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < w.size(); ++j)
                std::cout << (j ? " " : "") << w[i][j].str();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int report_exit(const VerificationReport& rep) {
    return rep.passed() ? kExitOk : kExitVerifyFail;
}

void print_report(const VerificationReport& rep, bool as_json, bool as_csv) {
    if (as_csv) {
        std::cout << rep.to_csv();
        return;
    }
    if (as_json) {
        std::cout << rep.to_json().dump() << "\n";
        return;
    }
    std::cout << rep.property << ": " << (rep.passed() ? "PASS" : "FAIL") << " ("
              << rep.cases << " cases";
    if (!rep.failures.empty()) std::cout << ", " << rep.failures.size() << " failures";
    std::cout << ", " << rep.elapsed_ms << " ms)\n";
    for (const auto& f : rep.failures)
        std::cout << "  FAIL " << f.input << " n=" << f.n << ": " << f.lhs
                  << " != " << f.rhs << "\n";
    for (const auto& note : rep.notes) std::cout << "  note: " << note << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polynomial integrals over the orthogonal group"};
    app.require_subcommand(1);

    std::string matrix_text, method = "auto", vec_a_text, vec_b_text;
    std::string n_text = "4:8", property_text;
    long n = 2, alpha = 0, beta = 0, trials = 0, max_entry = 6, max_sum = 10;
    int k = 1, max_degree = 0;
    std::uint64_t samples = 1000000, seed = 1;
    bool as_json = false, as_csv = false;

    auto* integral = app.add_subcommand("integral", "Exact integral I(a)");
    integral->add_option("--matrix", matrix_text, "exponent matrix, e.g. \"2,0;0,2\"")->required();
    integral->add_option("--n", n, "group dimension")->required();
    integral->add_option("--method", method, "closed|oracle|mc|auto");
    integral->add_flag("--json", as_json);

    auto* oracle = app.add_subcommand("oracle", "Weingarten-formula ground truth");
    oracle->add_option("--matrix", matrix_text)->required();
    oracle->add_option("--n", n)->required();
    oracle->add_flag("--json", as_json);

    auto* phi = app.add_subcommand("phi", "Normalized two-row integral Phi");
    phi->add_option("--a", vec_a_text, "top row, literal even exponents")->required();
    phi->add_option("--b", vec_b_text, "bottom row, literal even exponents")->required();
    phi->add_option("--n", n)->required();
    phi->add_flag("--json", as_json);

    auto* moments = app.add_subcommand("moments", "Joint moments in generic position");
    moments->add_option("--alpha", alpha)->required();
    moments->add_option("--beta", beta)->required();
    moments->add_option("--n", n)->required();
    moments->add_flag("--json", as_json);

    auto* weingarten = app.add_subcommand("weingarten", "Weingarten matrix or entry");
    weingarten->add_option("--k", k)->required();
    weingarten->add_option("--n", n)->required();
    std::vector<std::string> entry;
    weingarten->add_option("--entry", entry, "two pairings, e.g. \"(1 2)(3 4)\" \"(1 3)(2 4)\"")
        ->expected(2);
    weingarten->add_flag("--json", as_json);

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate");
    mc->add_option("--matrix", matrix_text)->required();
    mc->add_option("--n", n)->required();
    mc->add_option("--samples", samples);
    mc->add_option("--seed", seed);
    mc->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "Run an identity verifier");
    verify_cmd->add_option("property", property_text,
                           "flipping|compression|basic-extension|recursive-extension|"
                           "transmutation|elementary-flip|two-row-vs-oracle|"
                           "weingarten-elementary|n2-vs-oracle|asymptotic|f-symmetry|"
                           "conjecture-even|conjecture-odd")
        ->required();
    verify_cmd->add_option("--max-degree", max_degree);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_flag("--json", as_json);
    verify_cmd->add_flag("--csv", as_csv);

    auto* conjecture = app.add_subcommand("conjecture", "Verify the 2x2 conjectures");
    std::string which;
    conjecture->add_option("which", which, "even|odd")->required();
    conjecture->add_option("--max-entry", max_entry, "even case: largest entry");
    conjecture->add_option("--max-sum", max_sum, "odd case: largest a+b+c+d");
    conjecture->add_option("--n", n_text, "n range, e.g. 4:8");
    conjecture->add_option("--seed", seed);
    conjecture->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);

        if (integral->parsed()) return run_integral(matrix_text, n, method, as_json);
        if (oracle->parsed()) return run_integral(matrix_text, n, "oracle", as_json);

        if (phi->parsed()) {
            auto a = parse_vector(vec_a_text);
            auto b = parse_vector(vec_b_text);
            while (a.size() < b.size()) a.push_back(0);
            while (b.size() < a.size()) b.push_back(0);
            std::vector<long> ha, hb;
            for (long x : a) {
                if (x % 2 != 0) throw parity_error("phi: entries must be even");
                ha.push_back(x / 2);
            }
            for (long x : b) {
                if (x % 2 != 0) throw parity_error("phi: entries must be even");
                hb.push_back(x / 2);
            }
            ExactRational v = phi_two_row(ha, hb, n);
            long half_degree = 0;
            for (long x : ha) half_degree += x;
            for (long x : hb) half_degree += x;
            print_value(v, "Phi", n, half_degree, "closed", as_json);
            return kExitOk;
        }

        if (moments->parsed()) {
            ExactRational v = joint_moments(alpha, beta, n);
            print_value(v, "E[x^" + std::to_string(alpha) + " y^" + std::to_string(beta) + "]",
                        n, (alpha + beta) / 2, "closed", as_json);
            return kExitOk;
        }

        if (weingarten->parsed()) return run_weingarten(k, n, entry, as_json);

        if (mc->parsed()) {
            ExponentMatrix a = parse_matrix(matrix_text);
            McEstimate est = mc_integral(a, static_cast<int>(n), samples, seed);
            if (as_json)
                std::cout << est.to_json().dump() << "\n";
            else
                std::cout << "I(" << a.str() << ") ~ " << est.mean << " +/- "
                          << est.standard_error << "\n";
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            auto id = property_from_name(property_text);
            if (!id) throw domain_error("unknown property: " + property_text);
            VerifyBudget budget;
            budget.max_degree = max_degree;
            budget.trials = trials;
            VerificationReport rep = verify(*id, budget, seed);
            print_report(rep, as_json, as_csv);
            return report_exit(rep);
        }

        if (conjecture->parsed()) {
            auto [lo, hi] = parse_n_range(n_text);
            if (lo < 4)
                throw domain_error("conjecture: n range lower bound must be >= 4");
            VerifyBudget budget;
            budget.n_lo = lo;
            budget.n_hi = hi;
            VerificationReport rep;
            if (which == "even") {
                budget.max_degree = static_cast<int>(max_entry);
                rep = verify(PropertyId::ConjectureEven, budget, seed);
            } else if (which == "odd") {
                budget.max_degree = static_cast<int>(max_sum);
                rep = verify(PropertyId::ConjectureOdd, budget, seed);
            } else {
                throw domain_error("conjecture: expected 'even' or 'odd'");
            }
            print_report(rep, /*as_json=*/true, /*as_csv=*/false);
            return report_exit(rep);
        }

        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const gram_singular_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
