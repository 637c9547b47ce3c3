#include "ortho/pairing.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ortho {

bool admissible(const ExponentMatrix& a) {
    for (int i = 0; i < a.rows; ++i) {
        long s = 0;
        for (int j = 0; j < a.cols; ++j) s += a.at(i, j);
        if (s % 2 != 0) return false;
    }
    for (int j = 0; j < a.cols; ++j) {
        long s = 0;
        for (int i = 0; i < a.rows; ++i) s += a.at(i, j);
        if (s % 2 != 0) return false;
    }
    return true;
}

Pairing Pairing::from_pairs(std::vector<std::pair<int, int>> raw) {
    for (auto& [l, r] : raw) {
        if (l == r) throw contract_error("Pairing: element paired with itself");
        if (l > r) std::swap(l, r);
    }
    std::sort(raw.begin(), raw.end());
    int m = 2 * static_cast<int>(raw.size());
    std::vector<bool> seen(m + 1, false);
    for (auto [l, r] : raw) {
        if (l < 1 || r > m)
            throw contract_error("Pairing: element outside {1,...,2k}");
        if (seen[l] || seen[r])
            throw contract_error("Pairing: element occurs twice");
        seen[l] = seen[r] = true;
    }
    Pairing p;
    p.pairs = std::move(raw);
    return p;
}

std::vector<int> Pairing::partners() const {
    std::vector<int> partner(ground_size());
    for (auto [l, r] : pairs) {
        partner[l - 1] = r;
        partner[r - 1] = l;
    }
    return partner;
}

std::string Pairing::str() const {
    if (pairs.empty()) return "()";
    std::string out;
    for (auto [l, r] : pairs)
        out += "(" + std::to_string(l) + " " + std::to_string(r) + ")";
    return out;
}

std::vector<Pairing> enumerate_pairings(int k, int limit) {
    if (k < 0) throw contract_error("enumerate_pairings: negative k");
    if (k > limit)
        throw resource_error("enumerate_pairings: k=" + std::to_string(k) +
                             " exceeds limit " + std::to_string(limit));
    std::vector<Pairing> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    // Iterative lexicographic backtracking: at each depth the smallest
    // unmatched element is paired with each larger unmatched candidate in
    // turn. choice[d] counts candidates already tried at depth d.
    int m = 2 * k;
    std::vector<int> partner(m + 1, 0);
    std::vector<int> choice(k, 0);
    std::vector<std::pair<int, int>> taken(k, {0, 0});
    int depth = 0;
    while (depth >= 0) {
        if (depth == k) {
            Pairing p;
            for (int x = 1; x <= m; ++x)
                if (partner[x] > x) p.pairs.emplace_back(x, partner[x]);
            out.push_back(std::move(p));
            --depth;
            partner[taken[depth].first] = partner[taken[depth].second] = 0;
            ++choice[depth];
            continue;
        }
        int l = 1;
        while (l <= m && partner[l] != 0) ++l;
        int idx = choice[depth];
        int r = 0;
        for (int x = l + 1; x <= m; ++x) {
            if (partner[x] == 0 && idx-- == 0) { r = x; break; }
        }
        if (r == 0) {
            choice[depth] = 0;
            --depth;
            if (depth >= 0) {
                partner[taken[depth].first] = partner[taken[depth].second] = 0;
                ++choice[depth];
            }
            continue;
        }
        partner[l] = r;
        partner[r] = l;
        taken[depth] = {l, r};
        ++depth;
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

UnionFind join_of(const Pairing& p, const Pairing& s) {
    if (p.k() != s.k())
        throw contract_error("join: pairings of different ground sets");
    UnionFind uf(p.ground_size());
    for (auto [l, r] : p.pairs) uf.unite(l - 1, r - 1);
    for (auto [l, r] : s.pairs) uf.unite(l - 1, r - 1);
    return uf;
}

} // namespace

int join_block_count(const Pairing& p, const Pairing& s) {
    UnionFind uf = join_of(p, s);
    int blocks = 0;
    for (int x = 0; x < p.ground_size(); ++x)
        if (uf.find(x) == x) ++blocks;
    return blocks;
}

std::vector<int> join_type(const Pairing& p, const Pairing& s) {
    UnionFind uf = join_of(p, s);
    std::vector<int> type;
    for (int x = 0; x < p.ground_size(); ++x)
        if (uf.find(x) == x) type.push_back(uf.size[x] / 2);
    std::sort(type.rbegin(), type.rend());
    return type;
}

bool fits(const Pairing& p, const MultiIndex& i) {
    if (static_cast<int>(i.size()) != p.ground_size())
        throw contract_error("fits: multi-index length != 2k");
    for (auto [l, r] : p.pairs)
        if (i[l - 1] != i[r - 1]) return false;
    return true;
}

std::pair<MultiIndex, MultiIndex> multi_indices_of(const ExponentMatrix& a) {
    if (a.total_degree() % 2 != 0)
        throw parity_error("multi_indices_of: odd total degree, integral is 0");
    MultiIndex rows, cols;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            for (long t = 0; t < a.at(i, j); ++t) {
                rows.push_back(i + 1);
                cols.push_back(j + 1);
            }
    return {rows, cols};
}

Pairing parse_pairing(const std::string& text) {
    std::vector<std::pair<int, int>> raw;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", start);
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw parse_error("expected '('", pos);
        ++pos;
        skip_ws();
        if (pos < text.size() && text[pos] == ')') { ++pos; skip_ws(); continue; }
        int l = read_int();
        skip_ws();
        if (pos < text.size() && text[pos] == ',') ++pos;
        int r = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw parse_error("expected ')'", pos);
        ++pos;
        raw.emplace_back(l, r);
        skip_ws();
    }
    return Pairing::from_pairs(std::move(raw));
}

} // namespace ortho
