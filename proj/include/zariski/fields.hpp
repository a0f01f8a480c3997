#pragma once

// The three field settings: F = Q over D = Z, F = F_p(x) over D = F_p,
// and F = Q(x) over D = Q. Field elements are exact rationals in the
// first case and normalized rational functions in the other two.

#include <cstdint>
#include <variant>

#include "zariski/fp.hpp"
#include "zariski/poly.hpp"
#include "zariski/primes.hpp"
#include "zariski/rational.hpp"

namespace zariski {

struct QOverZ {
    using Elem = Rational;
    using PlaceKey = BigInt;
    static constexpr bool function_field = false;
    static constexpr bool has_infinity_place = false;

    Elem constant(long long v) const { return Rational(v); }
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
};

struct FpRational {
    uint32_t p;
    using Coeff = Fp;
    using Elem = RatFunc<Fp>;
    using PlaceKey = Poly<Fp>;
    static constexpr bool function_field = true;
    static constexpr bool has_infinity_place = true;

    explicit FpRational(uint32_t prime) : p(prime) {
        if (!is_prime_u64(p)) throw std::invalid_argument("FpRational: p must be prime");
    }

    Fp scalar(long long v) const { return Fp(v, p); }
    Poly<Fp> x_poly() const { return Poly<Fp>::monomial(Fp(1, p), 1); }
    Elem x() const { return Elem(x_poly()); }
    Elem constant(long long v) const { return Elem(Poly<Fp>(scalar(v))); }
    Elem zero() const { return Elem{}; }
    Elem one() const { return constant(1); }
};

struct QRational {
    using Coeff = Rational;
    using Elem = RatFunc<Rational>;
    using PlaceKey = Poly<Rational>;
    static constexpr bool function_field = true;
    static constexpr bool has_infinity_place = true;

    Rational scalar(long long v) const { return Rational(v); }
    Poly<Rational> x_poly() const { return Poly<Rational>::monomial(Rational(1), 1); }
    Elem x() const { return Elem(x_poly()); }
    Elem constant(long long v) const { return Elem(Poly<Rational>(Rational(v))); }
    Elem zero() const { return Elem{}; }
    Elem one() const { return constant(1); }
};

using FieldSpec = std::variant<QOverZ, FpRational, QRational>;

}  // namespace zariski
