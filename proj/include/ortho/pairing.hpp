#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ortho/exponent_matrix.hpp"

namespace ortho {

// Sequence of 2k positive integers (i_1, ..., i_2k).
using MultiIndex = std::vector<int>;

// Perfect matching of {1,...,2k}, stored canonically: l < r within each
// pair, pairs sorted by l. Canonical forms are unique per matching, so
// equality of the pair lists is equality of pairings.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;

    Pairing() = default;

    // Validates and canonicalizes an arbitrary pair list.
    static Pairing from_pairs(std::vector<std::pair<int, int>> raw);

    int k() const { return static_cast<int>(pairs.size()); }
    int ground_size() const { return 2 * k(); }

    // partner[x-1] = the element paired with x, 1-based values.
    std::vector<int> partners() const;

    // "(1 2)(3 4)"; the empty pairing renders as "()".
    std::string str() const;

    friend bool operator==(const Pairing& a, const Pairing& b) { return a.pairs == b.pairs; }
    friend bool operator<(const Pairing& a, const Pairing& b) { return a.pairs < b.pairs; }
};

inline constexpr int kDefaultPairingLimit = 8;

// All (2k-1)!! pairings of {1,...,2k} in lexicographic canonical order;
// k = 0 yields the single empty pairing.
std::vector<Pairing> enumerate_pairings(int k, int limit = kDefaultPairingLimit);

// Number of blocks of the join partition pi v sigma (connected components of
// the union of the two matchings).
int join_block_count(const Pairing& p, const Pairing& s);

// Cycle type of the join: component sizes divided by 2, sorted descending.
// A partition of k; has join_block_count(p, s) parts.
std::vector<int> join_type(const Pairing& p, const Pairing& s);

// The delta_pi(i) symbol: true iff every pair of p connects equal indices.
bool fits(const Pairing& p, const MultiIndex& i);

// Row-major expansion of prod u_ij^{a_ij} into the factor list of the
// Weingarten formula: first index carries row labels, second column labels.
std::pair<MultiIndex, MultiIndex> multi_indices_of(const ExponentMatrix& a);

// Parses "(1 2)(3 4)"; commas are accepted as separators too.
Pairing parse_pairing(const std::string& text);

} // namespace ortho
