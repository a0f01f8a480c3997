#pragma once

// Monic irreducible polynomials: deterministic tests and enumerators.
//
// Over F_p the test is trial division by all lower-degree monic
// polynomials, and the enumeration runs by degree, then by the
// coefficient tuple (c_{d-1}, ..., c_0) in lexicographic order.
//
// Over Q degrees 1-3 are decided exactly by the rational root test;
// degrees 4-8 are certified irreducible by reduction modulo a small
// prime when such a certificate exists, and are otherwise reported
// inconclusive (never guessed). Enumeration over Q is capped at
// degree 3, ordered by height N = max(degree, coefficient height),
// then degree, then the coefficient tuple.

#include <map>
#include <optional>
#include <vector>

#include "zariski/fields.hpp"
#include "zariski/fp.hpp"
#include "zariski/poly.hpp"
#include "zariski/primes.hpp"
#include "zariski/rational.hpp"

namespace zariski {

enum class Decision { no, yes, unknown };

// ---- F_p ----------------------------------------------------------------

inline std::vector<Poly<Fp>> fp_monics_of_degree(uint32_t p, int d) {
    std::vector<Poly<Fp>> out;
    std::vector<uint32_t> digits(static_cast<std::size_t>(d), 0);  // c_{d-1}..c_0
    for (;;) {
        std::vector<Fp> coeffs(static_cast<std::size_t>(d) + 1);
        coeffs[static_cast<std::size_t>(d)] = Fp(1, p);
        for (int i = 0; i < d; ++i)
            coeffs[static_cast<std::size_t>(d - 1 - i)] = Fp(digits[static_cast<std::size_t>(i)], p);
        out.push_back(Poly<Fp>(std::move(coeffs)));
        int pos = d - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == p - 1)
            digits[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    return out;
}

inline bool fp_irreducible(const Poly<Fp>& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("fp_irreducible: monic nonconstant input required");
    if (f.degree() == 1) return true;
    uint32_t p = f.leading().modulus();
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (const auto& g : fp_monics_of_degree(p, d))
            if (g.divides(f)) return false;
    return true;
}

// enumeration of monic irreducibles over F_p, by degree then lex tuple
inline const Poly<Fp>& fp_nth_irreducible(uint32_t p, std::size_t i) {
    static std::map<uint32_t, std::vector<Poly<Fp>>> cache;
    static std::map<uint32_t, int> next_degree;
    auto& list = cache[p];
    if (next_degree.find(p) == next_degree.end()) next_degree[p] = 1;
    while (list.size() <= i) {
        int d = next_degree[p];
        if (d > 12) throw InconclusiveError("irreducible enumeration beyond degree 12");
        for (const auto& f : fp_monics_of_degree(p, d))
            if (fp_irreducible(f)) list.push_back(f);
        ++next_degree[p];
    }
    return list[i];
}

// ---- Q ------------------------------------------------------------------

// all reduced rationals with height exactly h, in height order; the
// height of a/b is max(|a|, b), so 0 = 0/1 has height 1
inline std::vector<Rational> rationals_of_height(long long h) {
    std::vector<Rational> out;
    if (h == 0) return out;
    for (long long b = 1; b <= h; ++b)
        for (long long a = -h; a <= h; ++a) {
            if (std::max(a < 0 ? -a : a, b) != h) continue;
            if (BigInt::gcd(BigInt(a), BigInt(b)) != BigInt(1)) continue;
            out.emplace_back(BigInt(a), BigInt(b));
        }
    std::sort(out.begin(), out.end(), Rational::height_less);
    return out;
}

inline std::vector<Rational> rationals_up_to_height(long long h) {
    std::vector<Rational> out;
    for (long long k = 0; k <= h; ++k) {
        auto part = rationals_of_height(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// exact rational root existence for a monic rational polynomial
inline bool q_has_rational_root(const Poly<Rational>& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("q_has_rational_root: monic nonconstant input required");
    if (f[0].is_zero()) return true;  // root 0
    // substitute x = y/L with L the lcm of coefficient denominators:
    // the result is monic with integer coefficients, so rational roots
    // of f are y/L with y an integer divisor of the constant term
    BigInt lcm = 1;
    for (const auto& c : f.coeffs()) {
        BigInt g = BigInt::gcd(lcm, c.den());
        lcm = lcm / g * c.den();
    }
    int d = f.degree();
    std::vector<Rational> g(static_cast<std::size_t>(d) + 1);
    BigInt power = 1;  // L^(d-i)
    for (int i = d; i >= 0; --i) {
        g[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * Rational(power);
        power *= lcm;
    }
    BigInt constant = g[0].num();  // integer now
    auto factors = factor_integer(constant);
    // enumerate divisors of the constant term
    std::vector<BigInt> divisors = {BigInt(1)};
    for (const auto& [prime, mult] : factors) {
        std::vector<BigInt> next;
        BigInt pw = 1;
        for (long long e = 0; e <= mult; ++e) {
            for (const auto& dvs : divisors) next.push_back(dvs * pw);
            pw *= prime;
        }
        divisors = std::move(next);
    }
    auto eval_int = [&](const BigInt& y) {
        Rational acc(0);
        for (std::size_t i = g.size(); i-- > 0;) acc = acc * Rational(y) + g[i];
        return acc.is_zero();
    };
    for (const auto& dvs : divisors) {
        if (eval_int(dvs) || eval_int(-dvs)) return true;
    }
    return false;
}

// reduce a rational polynomial mod p; empty when a denominator vanishes mod p
inline std::optional<Poly<Fp>> reduce_mod_p(const Poly<Rational>& f, uint32_t p) {
    std::vector<Fp> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        BigInt dm = c.den() % BigInt(static_cast<long long>(p));
        if (dm.is_zero()) return std::nullopt;
        Fp num((c.num() % BigInt(static_cast<long long>(p))).to_int64(), p);
        Fp den(dm.to_int64(), p);
        coeffs.push_back(num / den);
    }
    return Poly<Fp>(std::move(coeffs));
}

inline uint64_t nth_prime_after(uint64_t p) {
    uint64_t c = p + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

// Degrees 1-3: exact. Degrees 4-8: certificate by reduction mod p for
// the primes below 100, else unknown. Above 8: unknown.
inline Decision q_irreducible(const Poly<Rational>& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("q_irreducible: monic nonconstant input required");
    int d = f.degree();
    if (d == 1) return Decision::yes;
    if (q_has_rational_root(f)) return Decision::no;
    if (d <= 3) return Decision::yes;  // no rational root and degree <= 3
    if (d > 8) return Decision::unknown;
    for (uint64_t p = 2; p < 100; p = nth_prime_after(p)) {
        auto fp = reduce_mod_p(f, static_cast<uint32_t>(p));
        if (!fp || fp->degree() != d) continue;
        if (fp_irreducible(fp->monic())) return Decision::yes;
    }
    return Decision::unknown;
}

// factor a nonzero polynomial over F_p into monic irreducibles with
// multiplicities (trial division over enumerated irreducibles)
inline std::vector<std::pair<Poly<Fp>, long long>> fp_factor(Poly<Fp> f) {
    if (f.is_zero()) throw std::domain_error("fp_factor: zero polynomial");
    uint32_t p = f.leading().modulus();
    std::vector<std::pair<Poly<Fp>, long long>> out;
    f = f.monic();
    std::size_t idx = 0;
    while (f.degree() > 0) {
        const Poly<Fp>& cand = fp_nth_irreducible(p, idx++);
        if (2 * cand.degree() > f.degree()) {  // what remains is irreducible
            out.emplace_back(f, 1);
            break;
        }
        long long mult = 0;
        Poly<Fp> q, r;
        for (;;) {
            Poly<Fp>::divmod(f, cand, q, r);
            if (!r.is_zero()) break;
            f = q;
            ++mult;
        }
        if (mult > 0) out.emplace_back(cand, mult);
    }
    return out;
}

// bounded factorization over Q: squarefree split (Yun), then rational
// roots, then a certified-irreducible cofactor; inconclusive otherwise
inline std::vector<std::pair<Poly<Rational>, long long>> q_factor_bounded(Poly<Rational> f) {
    if (f.is_zero()) throw std::domain_error("q_factor_bounded: zero polynomial");
    std::vector<std::pair<Poly<Rational>, long long>> out;
    f = f.monic();
    if (f.degree() == 0) return out;

    auto split_squarefree = [&out](Poly<Rational> part, long long mult) {
        // strip every rational root of the squarefree part
        while (part.degree() > 0 && q_has_rational_root(part)) {
            bool found = false;
            for (long long h = 0; h <= 64 && !found; ++h) {
                for (const auto& r : rationals_of_height(h)) {
                    std::vector<Rational> lc = {-r, Rational(1)};
                    Poly<Rational> lin{std::vector<Rational>(lc)};
                    Poly<Rational> q, rem;
                    Poly<Rational>::divmod(part, lin, q, rem);
                    if (rem.is_zero()) {
                        out.emplace_back(lin, mult);
                        part = q;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) throw InconclusiveError("q_factor_bounded: root beyond height bound");
        }
        if (part.degree() > 0) {
            if (q_irreducible(part) != Decision::yes)
                throw InconclusiveError("q_factor_bounded: cofactor not certified irreducible");
            out.emplace_back(part, mult);
        }
    };

    // Yun's squarefree decomposition (characteristic zero)
    Poly<Rational> g = Poly<Rational>::gcd(f, f.derivative());
    Poly<Rational> w = f / g;
    long long i = 1;
    while (w.degree() > 0) {
        Poly<Rational> y = Poly<Rational>::gcd(w, g);
        Poly<Rational> z = w / y;
        if (z.degree() > 0) split_squarefree(z, i);
        w = y;
        g = g / y;
        ++i;
    }
    return out;
}

// enumeration of monic irreducibles over Q: by N = max(degree, height),
// then degree (capped at 3), then the coefficient tuple (c_{d-1}..c_0)
// in height order
inline const Poly<Rational>& q_nth_irreducible(std::size_t i) {
    static std::vector<Poly<Rational>> list;
    static long long next_height = 1;
    while (list.size() <= i) {
        long long n = next_height;
        if (n > 64) throw InconclusiveError("irreducible enumeration beyond height 64");
        auto coeff_pool = rationals_up_to_height(n);
        for (int d = 1; d <= std::min<long long>(n, 3); ++d) {
            std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
            auto advance = [&]() {
                std::size_t k = idx.size();
                while (k-- > 0) {
                    if (idx[k] + 1 < coeff_pool.size()) {
                        ++idx[k];
                        return true;
                    }
                    idx[k] = 0;
                }
                return false;
            };
            do {
                // tuple (c_{d-1}, ..., c_0) over the pool, last index fastest
                std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
                coeffs[static_cast<std::size_t>(d)] = Rational(1);
                BigInt max_h = 0;
                for (int k = 0; k < d; ++k) {
                    const Rational& c = coeff_pool[idx[static_cast<std::size_t>(k)]];
                    coeffs[static_cast<std::size_t>(d - 1 - k)] = c;
                    max_h = std::max(max_h, c.height());
                }
                bool in_block = (d == n) ? max_h <= BigInt(n) : max_h == BigInt(n);
                if (in_block) {
                    Poly<Rational> f{std::vector<Rational>(coeffs)};
                    if (q_irreducible(f) == Decision::yes) list.push_back(f);
                }
            } while (advance());
        }
        ++next_height;
    }
    return list[i];
}

}  // namespace zariski
