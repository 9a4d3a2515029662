#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace unitsep {

using std::int64_t;

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

inline int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    int64_t r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> lo, hi;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

inline std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

// multiplicative order of a mod n; requires gcd(a,n)=1
inline int64_t multiplicative_order(int64_t a, int64_t n) {
    a %= n;
    if (a < 0) a += n;
    int64_t x = a % n, ord = 1;
    while (x != 1 % n) {
        x = x * a % n;
        ++ord;
    }
    return ord;
}

// squarefree part, sign preserved: n = s^2 * squarefree_part(n)
inline int64_t squarefree_part(int64_t n) {
    if (n == 0) return 0;
    int64_t sign = n < 0 ? -1 : 1;
    n = n < 0 ? -n : n;
    int64_t r = 1;
    for (int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e & 1) r *= p;
    }
    return sign * r * n;
}

// conductor of the quadratic field Q(sqrt(d)), d squarefree != 0,1
inline int64_t quadratic_conductor(int64_t d) {
    int64_t m = d < 0 ? -d : d;
    return ((d - 1) % 4 == 0) ? m : 4 * m;
}

// merge two lists of cyclic factor orders (a direct product) into invariant
// factors d1 | d2 | ... (ascending divisibility chain)
inline std::vector<int64_t> merge_invariant_factors(const std::vector<int64_t>& a,
                                                    const std::vector<int64_t>& b) {
    std::vector<int64_t> cyc;
    for (int64_t x : a)
        if (x > 1) cyc.push_back(x);
    for (int64_t x : b)
        if (x > 1) cyc.push_back(x);
    // prime -> exponents, largest first
    std::vector<std::pair<int64_t, std::vector<int>>> pp;
    for (int64_t x : cyc) {
        for (int64_t p : prime_factors(x)) {
            int e = 0;
            int64_t y = x;
            while (y % p == 0) {
                y /= p;
                ++e;
            }
            auto it = std::find_if(pp.begin(), pp.end(), [&](auto& q) { return q.first == p; });
            if (it == pp.end()) {
                pp.push_back({p, {e}});
            } else {
                it->second.push_back(e);
            }
        }
    }
    std::size_t slots = 0;
    for (auto& [p, es] : pp) {
        std::sort(es.rbegin(), es.rend());
        slots = std::max(slots, es.size());
    }
    std::vector<int64_t> out(slots, 1);
    for (auto& [p, es] : pp)
        for (std::size_t i = 0; i < es.size(); ++i) {
            int64_t q = 1;
            for (int j = 0; j < es[i]; ++j) q *= p;
            out[i] *= q;
        }
    std::sort(out.begin(), out.end()); // ascending => d1 | d2 | ...
    return out;
}

} // namespace unitsep
