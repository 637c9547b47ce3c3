#include "ortho/factorial.hpp"

#include <deque>
#include <mutex>

#include "ortho/errors.hpp"

namespace ortho {

namespace {

// Growable memo tables. std::deque keeps existing elements stable while the
// table grows; the mutex makes fills idempotent under concurrent use.
std::mutex g_mutex;
std::deque<mpz_class> g_factorial{1};          // g_factorial[m] = m!
std::deque<mpz_class> g_paper_df{1, 1, 1};     // g_paper_df[m] = (m-1)(m-3)...

} // namespace

mpz_class factorial(long m) {
    if (m < 0) throw contract_error("factorial: negative argument");
    std::lock_guard<std::mutex> lock(g_mutex);
    while (static_cast<long>(g_factorial.size()) <= m) {
        long next = static_cast<long>(g_factorial.size());
        g_factorial.push_back(g_factorial[next - 1] * next);
    }
    return g_factorial[m];
}

mpz_class paper_double_factorial(long m) {
    if (m < 0) throw contract_error("paper_double_factorial: negative argument");
    std::lock_guard<std::mutex> lock(g_mutex);
    while (static_cast<long>(g_paper_df.size()) <= m) {
        long next = static_cast<long>(g_paper_df.size());
        g_paper_df.push_back(g_paper_df[next - 2] * (next - 1));
    }
    return g_paper_df[m];
}

mpz_class binomial(long m, long r) {
    if (m < 0 || r < 0) throw contract_error("binomial: negative argument");
    if (r > m) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(r));
    return out;
}

} // namespace ortho
