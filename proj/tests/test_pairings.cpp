#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ortho/errors.hpp"
#include "ortho/pairing.hpp"

using namespace ortho;

TEST_CASE("pairing counts follow (2k-1)!!") {
    CHECK(enumerate_pairings(0).size() == 1);
    CHECK(enumerate_pairings(1).size() == 1);
    CHECK(enumerate_pairings(2).size() == 3);
    CHECK(enumerate_pairings(3).size() == 15);
    std::size_t expected = 1;
    for (int k = 1; k <= 6; ++k) {
        expected *= 2 * k - 1;
        CHECK(enumerate_pairings(k, 6).size() == expected);
    }
    CHECK_THROWS_AS(enumerate_pairings(9), resource_error);
}

TEST_CASE("enumeration is canonical, sorted and duplicate-free") {
    for (int k = 1; k <= 5; ++k) {
        auto all = enumerate_pairings(k);
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& p : all) {
            std::set<int> seen;
            for (auto [l, r] : p.pairs) {
                CHECK(l < r);
                seen.insert(l);
                seen.insert(r);
            }
            CHECK(static_cast<int>(seen.size()) == 2 * k);
            CHECK(*seen.rbegin() == 2 * k);
        }
        // the identity pairing (1 2)(3 4)... comes first
        for (int i = 0; i < k; ++i) {
            CHECK(all.front().pairs[i].first == 2 * i + 1);
            CHECK(all.front().pairs[i].second == 2 * i + 2);
        }
    }
}

TEST_CASE("from_pairs canonicalizes and validates") {
    Pairing p = Pairing::from_pairs({{4, 3}, {2, 1}});
    CHECK(p.str() == "(1 2)(3 4)");
    CHECK_THROWS_AS(Pairing::from_pairs({{1, 1}}), contract_error);
    CHECK_THROWS_AS(Pairing::from_pairs({{1, 2}, {2, 3}}), contract_error);
    CHECK_THROWS_AS(Pairing::from_pairs({{1, 3}}), contract_error); // 2 missing
}

TEST_CASE("join block count and type on hand-checked examples") {
    Pairing id = parse_pairing("(1 2)(3 4)");
    Pairing cross = parse_pairing("(1 3)(2 4)");
    Pairing nest = parse_pairing("(1 4)(2 3)");
    CHECK(join_block_count(id, id) == 2);
    CHECK(join_type(id, id) == std::vector<int>{1, 1});
    CHECK(join_block_count(id, cross) == 1);
    CHECK(join_type(id, cross) == std::vector<int>{2});
    CHECK(join_block_count(cross, nest) == 1);

    Pairing p6 = parse_pairing("(1 2)(3 4)(5 6)");
    Pairing s6 = parse_pairing("(1 3)(2 4)(5 6)");
    CHECK(join_block_count(p6, p6) == 3);
    CHECK(join_type(p6, s6) == std::vector<int>{2, 1});
}

TEST_CASE("join is symmetric, bounded, and maximal only on the diagonal") {
    auto all = enumerate_pairings(3);
    for (const auto& p : all)
        for (const auto& s : all) {
            int b = join_block_count(p, s);
            CHECK(b == join_block_count(s, p));
            CHECK(b >= 1);
            CHECK(b <= 3);
            CHECK((b == 3) == (p == s));
            auto t = join_type(p, s);
            CHECK(static_cast<int>(t.size()) == b);
            CHECK(std::is_sorted(t.rbegin(), t.rend()));
            int total = 0;
            for (int part : t) total += part;
            CHECK(total == 3);
        }
}

TEST_CASE("delta symbol on explicit multi-indices") {
    Pairing id = parse_pairing("(1 2)(3 4)");
    Pairing cross = parse_pairing("(1 3)(2 4)");
    CHECK(fits(id, {1, 1, 2, 2}));
    CHECK_FALSE(fits(cross, {1, 1, 2, 2}));
    CHECK(fits(cross, {1, 2, 1, 2}));
    CHECK(fits(id, {3, 3, 3, 3}));
    CHECK(fits(cross, {3, 3, 3, 3}));
}

TEST_CASE("multi-index expansion of an exponent matrix") {
    // u_11^2 u_22^2: factors (1,1),(1,1),(2,2),(2,2) row-major
    auto [rows, cols] = multi_indices_of(ExponentMatrix({{2, 0}, {0, 2}}));
    CHECK(rows == MultiIndex{1, 1, 2, 2});
    CHECK(cols == MultiIndex{1, 1, 2, 2});

    auto [r2, c2] = multi_indices_of(ExponentMatrix({{1, 1}, {1, 1}}));
    CHECK(r2 == MultiIndex{1, 1, 2, 2});
    CHECK(c2 == MultiIndex{1, 2, 1, 2});

    CHECK_THROWS_AS(multi_indices_of(ExponentMatrix({{1, 0}, {0, 0}})), parity_error);
}

TEST_CASE("admissibility = even row and column sums") {
    CHECK(admissible(ExponentMatrix({{2, 0}, {0, 2}})));
    CHECK(admissible(ExponentMatrix({{1, 1}, {1, 1}})));
    CHECK_FALSE(admissible(ExponentMatrix({{1, 0}, {0, 1}})));
    CHECK_FALSE(admissible(ExponentMatrix({{2, 1}, {0, 1}})));
    CHECK(admissible(ExponentMatrix()));
}

TEST_CASE("pairing parse and format round trip") {
    for (int k = 0; k <= 4; ++k)
        for (const auto& p : enumerate_pairings(k))
            CHECK(parse_pairing(p.str()) == p);
    CHECK(parse_pairing("(1,2)(3,4)") == parse_pairing("(1 2)(3 4)"));
    CHECK_THROWS_AS(parse_pairing("(1 2)(3"), parse_error);
    CHECK_THROWS_AS(parse_pairing("(1 2)(2 3)"), contract_error);
}
