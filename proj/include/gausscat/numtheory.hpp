#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gausscat {

using std::int64_t;

// Elementary number theory on machine integers. Conductors and group
// orders in this library stay well below 2^31, so int64_t is enough.

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

inline int64_t mod_reduce(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((__int128)a * b % m);
}

inline int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
    base = mod_reduce(base, m);
    int64_t acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline int64_t inv_mod(int64_t a, int64_t m) {
    int64_t t = 0, new_t = 1;
    int64_t r = m, new_r = mod_reduce(a, m);
    while (new_r != 0) {
        int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::domain_error("inv_mod: not coprime");
    return mod_reduce(t, m);
}

inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline int64_t euler_phi(int64_t n) {
    int64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> divs{1};
    for (auto [p, e] : factorize(n)) {
        size_t base = divs.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline int moebius(int64_t n) {
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

// Legendre symbol (a/p) for odd prime p, via Euler's criterion.
inline int legendre(int64_t a, int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("legendre: p must be an odd prime");
    a = mod_reduce(a, p);
    if (a == 0) return 0;
    int64_t e = pow_mod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// Jacobi symbol (a/n) for odd positive n.
inline int jacobi(int64_t a, int64_t n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd positive");
    a = mod_reduce(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Lift an automorphism exponent from (Z/N)* to (Z/L)*, N | L:
// returns k with k = n (mod N) and gcd(k, L) = 1. Primes of L absent
// from N get k = 1 on their component.
inline int64_t lift_exponent(int64_t n, int64_t N, int64_t L) {
    if (L % N != 0) throw std::domain_error("lift_exponent: N must divide L");
    n = mod_reduce(n, N);
    if (gcd64(n, N) != 1) throw std::domain_error("lift_exponent: exponent not coprime");
    int64_t k = 0, m = 1;
    for (auto [p, e] : factorize(L)) {
        int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        int64_t target = (N % p == 0) ? mod_reduce(n, pe) : 1;
        // CRT combine k (mod m) with target (mod pe)
        int64_t diff = mod_reduce(target - k, pe);
        int64_t step = mul_mod(diff, inv_mod(m % pe, pe), pe);
        k += m * step;
        m *= pe;
        k = mod_reduce(k, m);
    }
    return k == 0 ? m : k;  // L = 1 edge case
}

}  // namespace gausscat
