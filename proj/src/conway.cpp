#include "skeinlab/conway.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace skeinlab {

const LaurentPoly& conway_torus(long p) {
    thread_local std::map<long, LaurentPoly> cache;
    thread_local long filled = -1;  // keys 0..filled are all present
    if (filled < 0) {
        cache.emplace(0, LaurentPoly("z"));
        cache.emplace(1, LaurentPoly::one("z"));
        filled = 1;
    }
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    // Fill the nonnegative side up to |p| with the two-term recursion.
    const long a = std::labs(p);
    const LaurentPoly z = LaurentPoly::monomial(1, 1, "z");
    for (long k = filled; k < a; ++k)
        cache.emplace(k + 1, z * cache.at(k) + cache.at(k - 1));
    filled = std::max(filled, a);
    if (p >= 0) return cache.at(p);
    const LaurentPoly& pos = cache.at(a);
    LaurentPoly neg = (parity_sign(a + 1) == 1) ? pos : -pos;
    return cache.emplace(p, std::move(neg)).first->second;
}

LaurentPoly conway_torus_closed_form(long p) {
    if (p == 0) return LaurentPoly("z");
    const long a = std::labs(p);
    LaurentPoly r("z");
    for (long j = 0; 2 * j <= a - 1; ++j) r.add_term(a - 2 * j - 1, binomial(a - 1 - j, j));
    if (p < 0 && parity_sign(a + 1) == -1) r = -r;
    return r;
}

Int fibonacci_value(long p) { return conway_torus(p).eval(1); }

bool check_sum_rel(long x, long y) {
    return conway_torus(x + y) ==
           conway_torus(x) * conway_torus(y + 1) + conway_torus(x - 1) * conway_torus(y);
}

bool check_prod_expansion(long x, long k) {
    if (k < 1) throw std::invalid_argument("check_prod_expansion: need k >= 1");
    LaurentPoly rhs("z");
    for (long j = 0; j <= k - 1; ++j) {
        const LaurentPoly& c = conway_torus(x + k - 1 - 2 * j);
        rhs += (parity_sign(j) == 1) ? c : -c;
    }
    return conway_torus(x) * conway_torus(k) == rhs;
}

bool check_diff_prod(long x, long y, long p, long q, long kappa) {
    if (x + y != p + q) throw std::invalid_argument("check_diff_prod: need x+y == p+q");
    const LaurentPoly lhs =
        conway_torus(x) * conway_torus(y) - conway_torus(p) * conway_torus(q);
    LaurentPoly rhs = conway_torus(x - kappa) * conway_torus(y - kappa) -
                      conway_torus(p - kappa) * conway_torus(q - kappa);
    if (parity_sign(kappa) == -1) rhs = -rhs;
    return lhs == rhs;
}

bool check_power_expansion(long m, long p) {
    if (m < 0) throw std::invalid_argument("check_power_expansion: need m >= 0");
    LaurentPoly rhs("z");
    for (long j = 0; j <= m; ++j) {
        LaurentPoly term = conway_torus(m + p - 2 * j).scaled(binomial(m, j));
        rhs += (parity_sign(j) == 1) ? term : -term;
    }
    return LaurentPoly::monomial(1, m, "z") * conway_torus(p) == rhs;
}

bool check_gcd_props(long a, long b) {
    if (a == 0 && b == 0) throw std::invalid_argument("check_gcd_props: both indices zero");
    const long g = std::gcd(std::labs(a), std::labs(b));
    const LaurentPoly got = gcd(conway_torus(a), conway_torus(b));
    const LaurentPoly& want = conway_torus(g);
    if (got != want && got != -want) return false;
    if (a != 0) {
        try {
            exact_div(conway_torus(a * b), conway_torus(a));
        } catch (const InexactDivision&) {
            return false;
        }
    }
    return true;
}

}  // namespace skeinlab
