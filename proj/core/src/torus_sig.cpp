#include "twobridge/torus_sig.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace tb {

int a_parity(long q) { return (q % 2 != 0) ? 1 : 2; }

Rat b_parity(long q, long n) {
    return (q % 2 != 0 && n % 2 == 0) ? make_rat(Int(1), Int(2)) : Rat(0);
}

namespace {
std::map<std::pair<long, long>, Int> g_memo;
std::mutex g_memo_mutex;
}  // namespace

Int sigma_torus(long q, long n) {
    if (q < 1 || n < 1) throw std::domain_error("sigma_torus: q, n must be >= 1");
    if (q > n) std::swap(q, n);
    if (q == 1) return Int(0);
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = g_memo.find({q, n});
        if (it != g_memo.end()) return it->second;
    }
    const Int q2 = Int(q) * Int(q);
    Int result;
    if (n == q)
        result = (q2 - a_parity(q)) / 2;
    else if (n < 2 * q)
        result = q2 - a_parity(q) - sigma_torus(q, 2 * q - n);
    else if (n == 2 * q)
        result = q2 - 1;
    else
        result = sigma_torus(q, n - 2 * q) + q2 + a_parity(q) - 2;
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(std::make_pair(q, n), result);
    return result;
}

bool check_bounds(long q, long n) {
    if (q > n) std::swap(q, n);
    const Int sigma = sigma_torus(q, n);
    const Rat lower = make_rat(Int(q - 1) * Int(n), Int(2));
    const Rat upper = make_rat(Int(q) * Int(n + 1), Int(2)) - a_parity(q) - b_parity(q, n);
    return lower <= Rat(sigma) && Rat(sigma) <= upper;
}

Int total_sig_torus_2_odd(long g, long p) {
    if (g < 1 || p < 2) throw std::domain_error("total_sig_torus_2_odd: need g >= 1, p >= 2");
    return sigma_torus(2 * g + 1, p);
}

}  // namespace tb
