#pragma once

// Polynomials and fractions in the auxiliary indeterminate T with
// coefficients in the field F of a setting. Fractions are reduced only
// lazily (no gcd requirement); equality is by cross-multiplication.
// The Gauss valuation of a place extends to F(T) coefficient-wise.

#include "zariski/ext_int.hpp"
#include "zariski/places.hpp"
#include "zariski/poly.hpp"

namespace zariski {

template <typename S>
using TPoly = Poly<typename S::Elem>;

// Unreduced fraction of T-polynomials. The canonical zero keeps both
// parts empty so it needs no field context.
template <typename S>
struct TRational {
    TPoly<S> num;
    TPoly<S> den;

    TRational() = default;
    TRational(TPoly<S> n, TPoly<S> d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("TRational: zero denominator");
        if (num.is_zero()) den = TPoly<S>{};
    }
    explicit TRational(TPoly<S> n) : num(std::move(n)) {
        if (!num.is_zero()) den = TPoly<S>(num.unit_one());
    }

    bool is_zero() const { return num.is_zero(); }

    friend TRational operator+(const TRational& a, const TRational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return TRational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend TRational operator-(const TRational& a, const TRational& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return -b;
        return TRational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    TRational operator-() const {
        TRational r = *this;
        r.num = -r.num;
        return r;
    }
    friend TRational operator*(const TRational& a, const TRational& b) {
        if (a.is_zero() || b.is_zero()) return TRational{};
        return TRational(a.num * b.num, a.den * b.den);
    }
    friend TRational operator/(const TRational& a, const TRational& b) {
        if (b.is_zero()) throw std::domain_error("TRational: division by zero");
        if (a.is_zero()) return TRational{};
        return TRational(a.num * b.den, a.den * b.num);
    }

    friend bool operator==(const TRational& a, const TRational& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const TRational& a, const TRational& b) { return !(a == b); }
};

// Gauss value of a T-polynomial: the minimum of the coefficient values
// (zero coefficients contribute +infinity).
template <typename S>
ExtInt gauss_poly_value(const S& s, const Place<S>& v, const TPoly<S>& f) {
    ExtInt m = ExtInt::infinity();
    for (const auto& c : f.coeffs()) m = ExtInt::min(m, place_value(s, v, c));
    return m;
}

// w*(num/den) = min_i v(f_i) - min_j v(g_j); the Gaussian extension of v
// to F(T) with unchanged value group
template <typename S>
ExtInt gauss_value(const S& s, const Place<S>& v, const TRational<S>& h) {
    if (v.is_trivial())
        throw std::invalid_argument("gauss_value: trivial place has the trivial extension");
    if (h.num.is_zero()) return ExtInt::infinity();
    return gauss_poly_value(s, v, h.num) - gauss_poly_value(s, v, h.den);
}

// membership in the Gaussian extension V* = V[T] localized at M_V[T];
// the trivial place extends to the whole of F(T)
template <typename S>
bool in_star(const S& s, const Place<S>& v, const TRational<S>& h) {
    if (v.is_trivial()) return true;
    return gauss_value(s, v, h) >= ExtInt(0);
}

}  // namespace zariski
