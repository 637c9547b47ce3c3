#include "ortho/weingarten.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ortho/bareiss.hpp"

namespace ortho {

namespace {

mpz_class int_pow(long n, int e) {
    mpz_class out, base(n);
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

// Join-type machinery for one degree k. W_kn(pi, sigma) is a function of the
// cycle type of pi v sigma alone (the Gram matrix lies in the commutative
// adjacency algebra of the pair-of-pairings association scheme), so instead
// of eliminating the full (2k-1)!! x (2k-1)!! system, the oracle solves for
// one weight per type. The structure constants below pin down the algebra.
struct SchemeTable {
    int k = 0;
    std::vector<Pairing> pairings;                // canonical order
    std::vector<std::vector<int>> types;          // partitions of k
    std::map<std::vector<int>, int> type_index;
    int identity_class = 0;                       // type 1^k
    // c[nu][lambda*t + mu] = #{tau : type(rep_pi, tau)=lambda, type(tau, rep_sigma)=mu}
    // for a fixed representative pair of class nu.
    std::vector<std::vector<long>> c;
};

std::vector<std::vector<int>> partitions_of(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Descending partitions, lexicographically.
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

// Join type of two pairings given as 0-based partner arrays.
std::vector<int> join_type_flat(const std::vector<int>& p, const std::vector<int>& s) {
    int m = static_cast<int>(p.size());
    std::vector<int> parent(m), size(m, 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    };
    for (int x = 0; x < m; ++x) {
        unite(x, p[x]);
        unite(x, s[x]);
    }
    std::vector<int> type;
    for (int x = 0; x < m; ++x)
        if (find(x) == x) type.push_back(size[x] / 2);
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::vector<int> zero_based_partners(const Pairing& p) {
    std::vector<int> out(p.ground_size());
    for (auto [l, r] : p.pairs) {
        out[l - 1] = r - 1;
        out[r - 1] = l - 1;
    }
    return out;
}

std::mutex g_scheme_mutex;
std::map<int, SchemeTable> g_schemes;

const SchemeTable& scheme_table(int k, int limit) {
    std::lock_guard<std::mutex> lock(g_scheme_mutex);
    auto it = g_schemes.find(k);
    if (it != g_schemes.end()) return it->second;

    SchemeTable t;
    t.k = k;
    t.pairings = enumerate_pairings(k, limit);
    t.types = partitions_of(k);
    for (int i = 0; i < static_cast<int>(t.types.size()); ++i)
        t.type_index[t.types[i]] = i;
    t.identity_class = t.type_index.at(std::vector<int>(k, 1));

    int nt = static_cast<int>(t.types.size());
    std::vector<std::vector<int>> flat;
    flat.reserve(t.pairings.size());
    for (const auto& p : t.pairings) flat.push_back(zero_based_partners(p));

    // Representative pair per class: (pi_0, sigma) with pi_0 the first
    // pairing; every class is hit since S_2k acts transitively.
    const std::vector<int>& pi0 = flat.front();
    std::vector<int> rep(nt, -1);
    for (int s = 0; s < static_cast<int>(flat.size()); ++s) {
        int cls = t.type_index.at(join_type_flat(pi0, flat[s]));
        if (rep[cls] < 0) rep[cls] = s;
    }

    t.c.assign(nt, std::vector<long>(nt * nt, 0));
    for (int nu = 0; nu < nt; ++nu) {
        const std::vector<int>& sigma = flat[rep[nu]];
        for (const auto& tau : flat) {
            int lam = t.type_index.at(join_type_flat(pi0, tau));
            int mu = t.type_index.at(join_type_flat(tau, sigma));
            ++t.c[nu][lam * nt + mu];
        }
    }
    return g_schemes.emplace(k, std::move(t)).first->second;
}

std::mutex g_weights_mutex;
std::map<std::pair<int, long>, std::vector<ExactRational>> g_weights;

// One Weingarten weight per join type: solves (sum_lam w_lam A_lam) G = Id
// in the adjacency algebra, a p(k) x p(k) exact system. Singular iff the
// full Gram matrix is singular.
const std::vector<ExactRational>& class_weights(int k, long n, int limit) {
    {
        std::lock_guard<std::mutex> lock(g_weights_mutex);
        auto it = g_weights.find({k, n});
        if (it != g_weights.end()) return it->second;
    }
    const SchemeTable& t = scheme_table(k, limit);
    int nt = static_cast<int>(t.types.size());
    std::vector<mpz_class> M(nt * nt);
    for (int nu = 0; nu < nt; ++nu)
        for (int lam = 0; lam < nt; ++lam) {
            mpz_class acc = 0;
            for (int mu = 0; mu < nt; ++mu) {
                long cc = t.c[nu][lam * nt + mu];
                if (cc) acc += cc * int_pow(n, static_cast<int>(t.types[mu].size()));
            }
            M[nu * nt + lam] = acc;
        }
    std::vector<mpz_class> rhs(nt, 0);
    rhs[t.identity_class] = 1;
    auto w = bareiss_solve(std::move(M), nt, std::move(rhs));
    if (!w) throw gram_singular_error(k, n);
    std::lock_guard<std::mutex> lock(g_weights_mutex);
    return g_weights.emplace(std::make_pair(k, n), std::move(*w)).first->second;
}

// All pairings of the positions that respect the equality classes of the
// multi-index, as 0-based partner arrays. Empty when some class is odd.
std::vector<std::vector<int>> fitting_pairings(const MultiIndex& idx) {
    int m = static_cast<int>(idx.size());
    std::vector<std::vector<int>> out;
    std::map<int, int> class_sizes;
    for (int v : idx) ++class_sizes[v];
    for (auto [v, sz] : class_sizes)
        if (sz % 2 != 0) return out;

    std::vector<int> partner(m, -1);
    auto rec = [&](auto&& self, int from) -> void {
        int l = from;
        while (l < m && partner[l] >= 0) ++l;
        if (l == m) {
            out.push_back(partner);
            return;
        }
        for (int r = l + 1; r < m; ++r) {
            if (partner[r] >= 0 || idx[r] != idx[l]) continue;
            partner[l] = r;
            partner[r] = l;
            self(self, l + 1);
            partner[l] = -1;
            partner[r] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

// Singular-Gram path (n < k). The Weingarten formula still holds with the
// pseudo-inverse G^+, and both delta vectors u, v lie in the column space of
// G, so u^T G^+ v = u^T y for ANY exact solution y of the consistent system
// G y = v. Because v is invariant under the Young subgroup H stabilizing the
// column multi-index (and G commutes with the S_2k action), an H-invariant
// solution exists and the system collapses to one unknown per H-orbit of
// pairings; orbits are classified by the matrix of edge counts between the
// equality classes. Any kernel component is orthogonal to u, so the collapsed
// solve is exact.
ExactRational oracle_singular(int k, long n, const MultiIndex& row_idx,
                              const MultiIndex& col_idx, int limit) {
    auto pairings = enumerate_pairings(k, limit);
    int m = 2 * k;

    // class id per position, from the column multi-index values
    std::map<int, int> value_class;
    std::vector<int> cls(m);
    for (int pos = 0; pos < m; ++pos) {
        auto [it, fresh] = value_class.emplace(col_idx[pos],
                                               static_cast<int>(value_class.size()));
        (void)fresh;
        cls[pos] = it->second;
    }
    int ncls = static_cast<int>(value_class.size());

    auto fits_flat = [&](const std::vector<int>& partner, const MultiIndex& idx) {
        for (int x = 0; x < m; ++x)
            if (idx[x] != idx[partner[x]]) return false;
        return true;
    };

    std::vector<std::vector<int>> flat;
    flat.reserve(pairings.size());
    for (const auto& p : pairings) flat.push_back(zero_based_partners(p));

    // orbit id per pairing: the between-class edge count profile
    std::map<std::vector<int>, int> orbit_of_profile;
    std::vector<int> orbit(flat.size());
    std::vector<std::size_t> rep;        // first member per orbit
    std::vector<mpz_class> u_count;      // # members fitting the row index
    std::vector<bool> fits_col;          // whether the orbit fits the column index
    for (std::size_t s = 0; s < flat.size(); ++s) {
        std::vector<int> profile(ncls * ncls, 0);
        for (int x = 0; x < m; ++x)
            if (x < flat[s][x]) {
                int a = std::min(cls[x], cls[flat[s][x]]);
                int b = std::max(cls[x], cls[flat[s][x]]);
                ++profile[a * ncls + b];
            }
        auto [it, fresh] =
            orbit_of_profile.emplace(std::move(profile),
                                     static_cast<int>(orbit_of_profile.size()));
        orbit[s] = it->second;
        if (fresh) {
            rep.push_back(s);
            u_count.push_back(0);
            fits_col.push_back(fits_flat(flat[s], col_idx));
        }
        if (fits_flat(flat[s], row_idx)) ++u_count[orbit[s]];
    }

    // collapsed system M ybar = vbar over the orbits
    std::size_t no = rep.size();
    std::vector<mpq_class> M(no * no), rhs(no);
    for (std::size_t o = 0; o < no; ++o) {
        const auto& pi = flat[rep[o]];
        for (std::size_t s = 0; s < flat.size(); ++s) {
            auto type = join_type_flat(pi, flat[s]);
            M[o * no + orbit[s]] += int_pow(n, static_cast<int>(type.size()));
        }
        rhs[o] = fits_col[o] ? 1 : 0;
    }

    // rational Gaussian elimination; free variables stay 0, zero rows must be
    // consistent (guaranteed by the column-space argument above)
    std::vector<long> pivot_col(no, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < no && row < no; ++col) {
        std::size_t p = row;
        while (p < no && M[p * no + col] == 0) ++p;
        if (p == no) continue;
        if (p != row) {
            for (std::size_t j = 0; j < no; ++j)
                std::swap(M[p * no + j], M[row * no + j]);
            std::swap(rhs[p], rhs[row]);
        }
        mpq_class inv = M[row * no + col];
        for (std::size_t j = col; j < no; ++j) M[row * no + j] /= inv;
        rhs[row] /= inv;
        for (std::size_t r = 0; r < no; ++r) {
            if (r == row || M[r * no + col] == 0) continue;
            mpq_class f = M[r * no + col];
            for (std::size_t j = col; j < no; ++j)
                M[r * no + j] -= f * M[row * no + j];
            rhs[r] -= f * rhs[row];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    for (std::size_t r = row; r < no; ++r)
        if (rhs[r] != 0)
            throw contract_error("integral_oracle: inconsistent singular system");

    std::vector<mpq_class> y(no, 0);
    for (std::size_t r = 0; r < row; ++r) y[pivot_col[r]] = rhs[r];

    mpq_class acc = 0;
    for (std::size_t o = 0; o < no; ++o)
        if (u_count[o] != 0) acc += mpq_class(u_count[o]) * y[o];
    return ExactRational(acc);
}

} // namespace

GramMatrix gram_matrix(int k, long n, int limit) {
    if (k < 1) throw contract_error("gram_matrix: k must be >= 1");
    auto pairings = enumerate_pairings(k, limit);
    GramMatrix g;
    g.k = k;
    g.n = n;
    g.size = pairings.size();
    g.entries.resize(g.size * g.size);
    for (std::size_t i = 0; i < g.size; ++i)
        for (std::size_t j = i; j < g.size; ++j) {
            mpz_class v = int_pow(n, join_block_count(pairings[i], pairings[j]));
            g.entries[i * g.size + j] = v;
            g.entries[j * g.size + i] = v;
        }
    return g;
}

ExactRational weingarten_entry(int k, long n, const Pairing& p, const Pairing& s,
                               int limit) {
    if (p.k() != k || s.k() != k)
        throw contract_error("weingarten_entry: pairing degree != k");
    auto pairings = enumerate_pairings(k, limit);
    auto find = [&](const Pairing& x) {
        auto it = std::lower_bound(pairings.begin(), pairings.end(), x);
        return static_cast<std::size_t>(it - pairings.begin());
    };
    std::size_t ip = find(p), is = find(s);
    GramMatrix g = gram_matrix(k, n, limit);
    std::vector<mpz_class> rhs(g.size, 0);
    rhs[is] = 1;
    auto x = bareiss_solve(std::move(g.entries), g.size, std::move(rhs));
    if (!x) throw gram_singular_error(k, n);
    return (*x)[ip];
}

std::vector<std::vector<ExactRational>> weingarten_matrix(int k, long n, int limit) {
    const SchemeTable& t = scheme_table(k, limit);
    const auto& w = class_weights(k, n, limit);
    std::size_t m = t.pairings.size();
    std::vector<std::vector<ExactRational>> out(m, std::vector<ExactRational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            int cls = t.type_index.at(join_type(t.pairings[i], t.pairings[j]));
            out[i][j] = out[j][i] = w[cls];
        }
    return out;
}

ExactRational integral_oracle(const ExponentMatrix& a, long n, int limit) {
    if (a.empty() || a.total_degree() == 0) return ExactRational(1);
    if (n < 2) throw domain_error("integral_oracle: n must be >= 2");
    if (!admissible(a)) return ExactRational(0);

    long total = a.total_degree();
    int k = static_cast<int>(total / 2);
    if (k > limit)
        throw resource_error("integral_oracle: degree k=" + std::to_string(k) +
                             " exceeds limit " + std::to_string(limit));

    auto [row_idx, col_idx] = multi_indices_of(a);
    auto u = fitting_pairings(row_idx);
    auto v = fitting_pairings(col_idx);
    if (u.empty() || v.empty()) return ExactRational(0);

    const SchemeTable& t = scheme_table(k, std::max(limit, kDefaultGramLimit));
    const std::vector<ExactRational>* w = nullptr;
    try {
        w = &class_weights(k, n, std::max(limit, kDefaultGramLimit));
    } catch (const gram_singular_error&) {
        return oracle_singular(k, n, row_idx, col_idx,
                               std::max(limit, kDefaultGramLimit));
    }

    // Tally join types over the fitting product set, then contract once.
    // u is invariant under the Young subgroup stabilizing the row
    // multi-index, so the histogram of join types against u is constant on
    // each stabilizer orbit of v; v collapses to one representative per
    // orbit (profiles of edge counts between the row equality classes).
    int m2 = 2 * k;
    std::map<int, int> row_value_class;
    std::vector<int> rcls(m2);
    for (int pos = 0; pos < m2; ++pos) {
        auto [it, fresh] = row_value_class.emplace(
            row_idx[pos], static_cast<int>(row_value_class.size()));
        (void)fresh;
        rcls[pos] = it->second;
    }
    int nrc = static_cast<int>(row_value_class.size());
    std::map<std::vector<int>, std::pair<const std::vector<int>*, unsigned long>>
        v_orbits;
    for (const auto& sigma : v) {
        std::vector<int> profile(nrc * nrc, 0);
        for (int x = 0; x < m2; ++x)
            if (x < sigma[x]) {
                int lo = std::min(rcls[x], rcls[sigma[x]]);
                int hi = std::max(rcls[x], rcls[sigma[x]]);
                ++profile[lo * nrc + hi];
            }
        auto [it, fresh] = v_orbits.try_emplace(std::move(profile), &sigma, 0ul);
        (void)fresh;
        ++it->second.second;
    }
    std::vector<unsigned long> counts(t.types.size(), 0);
    for (const auto& [profile, rep] : v_orbits) {
        (void)profile;
        for (const auto& pi : u)
            counts[t.type_index.at(join_type_flat(pi, *rep.first))] += rep.second;
    }

    ExactRational acc(0);
    for (std::size_t cls = 0; cls < counts.size(); ++cls)
        if (counts[cls])
            acc += ExactRational(mpz_class(counts[cls])) * (*w)[cls];
    return acc;
}

ExponentMatrix elementary_matrix_of(const Pairing& p, const Pairing& s) {
    if (p.k() != s.k())
        throw contract_error("elementary_matrix_of: pairings of different degree");
    int k = p.k();
    ExponentMatrix a(k, k);
    std::vector<int> p_string(2 * k), s_string(2 * k);
    for (int i = 0; i < k; ++i) {
        p_string[p.pairs[i].first - 1] = i;
        p_string[p.pairs[i].second - 1] = i;
        s_string[s.pairs[i].first - 1] = i;
        s_string[s.pairs[i].second - 1] = i;
    }
    for (int r = 0; r < 2 * k; ++r) ++a.at(p_string[r], s_string[r]);
    return a;
}

} // namespace ortho
