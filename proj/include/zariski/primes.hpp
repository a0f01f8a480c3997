#pragma once

// Deterministic prime utilities by trial division. Desk scale: primality
// of keys beyond the trial bound is reported as inconclusive rather than
// guessed.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zariski/bigint.hpp"

namespace zariski {

struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// trial division up to 10^6; beyond that primality is inconclusive here
inline bool is_prime_checked(const BigInt& n) {
    if (n <= BigInt(1)) return false;
    static const BigInt kBound = BigInt(1000000LL) * BigInt(1000000LL);
    if (n > kBound)
        throw InconclusiveError("prime test beyond trial-division bound");
    uint64_t v = static_cast<uint64_t>(n.to_int64());
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline uint64_t nth_prime(std::size_t i) {
    static std::vector<uint64_t> cache = {2, 3, 5, 7, 11, 13};
    while (cache.size() <= i) {
        uint64_t c = cache.back() + 2;
        while (!is_prime_u64(c)) c += 2;
        cache.push_back(c);
    }
    return cache[i];
}

// p-adic valuation of a nonzero integer
inline long long padic(const BigInt& p, BigInt n) {
    if (n.is_zero()) throw std::domain_error("padic: valuation of zero");
    long long v = 0;
    BigInt q, r;
    for (;;) {
        BigInt::divmod(n, p, q, r);
        if (!r.is_zero()) return v;
        n = q;
        ++v;
    }
}

// factor n by trial division; throws InconclusiveError past the bound
inline std::vector<std::pair<BigInt, long long>> factor_integer(BigInt n) {
    if (n.is_zero()) throw std::domain_error("factor_integer: zero");
    if (n.is_negative()) n = -n;
    std::vector<std::pair<BigInt, long long>> out;
    if (n.is_one()) return out;
    uint64_t bound = 1000000;
    for (uint64_t d = 2; ; ++d) {
        BigInt bd(static_cast<long long>(d));
        if (bd * bd > n) break;
        if (d > bound)
            throw InconclusiveError("integer factorization beyond trial-division bound");
        long long e = 0;
        BigInt q, r;
        for (;;) {
            BigInt::divmod(n, bd, q, r);
            if (!r.is_zero()) break;
            n = q;
            ++e;
        }
        if (e > 0) out.emplace_back(bd, e);
        if (n.is_one()) return out;
    }
    if (!n.is_one()) out.emplace_back(n, 1);
    return out;
}

}  // namespace zariski
