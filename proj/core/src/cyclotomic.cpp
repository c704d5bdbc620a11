#include "twobridge/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace tb {

namespace {
std::map<unsigned long, Laurent> g_cyclo;
std::mutex g_cyclo_mutex;

Laurent compute_cyclotomic(unsigned long d) {
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e; all divisors are monic.
    Laurent num = Laurent(Int(1), static_cast<long>(d)) - Laurent(Int(1), 0);
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        num = num.divide_exact(cyclotomic(e));
    }
    return num;
}
}  // namespace

const Laurent& cyclotomic(unsigned long d) {
    if (d == 0) throw std::domain_error("cyclotomic: d must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo.find(d);
        if (it != g_cyclo.end()) return it->second;
    }
    Laurent v = compute_cyclotomic(d);
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return g_cyclo.emplace(d, std::move(v)).first->second;
}

bool divides_exactly(const Laurent& divisor, const Laurent& p) {
    if (p.is_zero()) return true;
    try {
        (void)p.divide_exact(divisor);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace tb
