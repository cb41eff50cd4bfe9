#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace yangian {

// Scalars are residues in [0, p) for a small odd prime p.
using Scalar = std::uint32_t;

inline bool is_prime(std::uint32_t m) {
    if (m < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

inline Scalar add_mod(Scalar a, Scalar b, Scalar p) {
    Scalar s = a + b;
    return s >= p ? s - p : s;
}

inline Scalar sub_mod(Scalar a, Scalar b, Scalar p) {
    return a >= b ? a - b : a + p - b;
}

inline Scalar neg_mod(Scalar a, Scalar p) {
    return a == 0 ? 0 : p - a;
}

inline Scalar mul_mod(Scalar a, Scalar b, Scalar p) {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Scalar pow_mod(Scalar a, std::uint64_t e, Scalar p) {
    std::uint64_t r = 1, x = a % p;
    while (e) {
        if (e & 1)
            r = r * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return static_cast<Scalar>(r);
}

// Reduce an arbitrary signed integer into [0, p).
inline Scalar reduce_mod(long long v, Scalar p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0)
        r += p;
    return static_cast<Scalar>(r);
}

// Cached inverse tables, one per prime seen. Thread-local so workers never
// contend; the table is a pure function of p.
inline Scalar inv_mod(Scalar a, Scalar p) {
    if (a == 0)
        throw std::domain_error("inv_mod: zero has no inverse");
    static thread_local std::unordered_map<Scalar, std::vector<Scalar>> tables;
    auto& tab = tables[p];
    if (tab.empty()) {
        tab.resize(p, 0);
        for (Scalar x = 1; x < p; ++x)
            tab[x] = pow_mod(x, p - 2, p);
    }
    return tab[a];
}

// binomial(m, k) mod p via the Lucas decomposition in base p.
inline Scalar binomial_mod(std::uint64_t m, std::uint64_t k, Scalar p) {
    if (k > m)
        return 0;
    Scalar result = 1;
    while (k > 0 || m > 0) {
        std::uint64_t mi = m % p, ki = k % p;
        if (ki > mi)
            return 0;
        // binomial(mi, ki) with mi, ki < p, exact in 64 bits for small p
        Scalar num = 1, den = 1;
        for (std::uint64_t t = 0; t < ki; ++t) {
            num = mul_mod(num, reduce_mod(static_cast<long long>(mi - t), p), p);
            den = mul_mod(den, reduce_mod(static_cast<long long>(t + 1), p), p);
        }
        result = mul_mod(result, mul_mod(num, inv_mod(den, p), p), p);
        m /= p;
        k /= p;
    }
    return result;
}

}  // namespace yangian
