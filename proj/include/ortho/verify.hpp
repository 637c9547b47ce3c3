#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ortho/rational.hpp"

namespace ortho {

// Every identity-in-n checked by this library, each bound to one routine
// whose two sides go through different code paths.
enum class PropertyId {
    Flipping,            // column flip invariance of Phi
    Compression,         // zero-bottom block collapses to its sum
    BasicExtension,      // (a,2;b,0) recurrence
    RecursiveExtension,  // (a,c+2;b,0) recurrence
    Transmutation,       // (2;0) column <-> n -> n+2 shift
    ElementaryFlip,      // elementary Phi depends on (a,b) through a+b
    TwoRowVsOracle,      // two-row formula against the Weingarten oracle
    WeingartenElementary,// W entries as elementary-matrix integrals
    N2VsOracle,          // n=2 closed form against the oracle
    Asymptotic,          // n^k I(a) -> prod pdf(a_ij) at rate 1/n
    FSymmetry,           // f(a,b,c,d) symmetric under all 24 permutations
    ConjectureEven,      // conjectured even hypergeometric sum
    ConjectureOdd,       // conjectured odd hypergeometric sum
};

std::string property_name(PropertyId id);
std::optional<PropertyId> property_from_name(const std::string& name);
std::vector<PropertyId> all_properties();

struct Failure {
    std::string input;
    long n = 0;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string property;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes; // per-case oracle errors, not fatal
    std::vector<long> n_samples;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
    // "case,n,lhs,rhs,status" rows for failures plus a summary row.
    std::string to_csv() const;
};

// Case/degree limits for a sweep. Zeros select per-property defaults.
struct VerifyBudget {
    int max_degree = 0; // half-degree cap (or max entry / max sum, per property)
    long trials = 0;    // number of random cases, where sampling is used
    long n_lo = 0;      // explicit n range, where the property fixes one
    long n_hi = 0;
};

// PIT sample points for identities in n at half-degree k: after clearing the
// explicit double-factorial denominators both sides are rational functions
// of n of degree at most D = 2k+2, so agreement at the D+2 consecutive
// points {k+1, ..., k+D+2} (all beyond the poles) forces the identity.
std::vector<long> n_samples_for(int k);

// Deterministic sweep: identical (property, budget, seed) produce identical
// reports (up to timing). Per-case oracle errors are recorded as notes.
VerificationReport verify(PropertyId property, VerifyBudget budget = {},
                          std::uint64_t seed = 1);

} // namespace ortho
