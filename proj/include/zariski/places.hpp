#pragma once

// Places: the valuation rings of the three field settings. Non-trivial
// places of Q/Z are the finite primes; of k(x)/k the monic irreducible
// polynomials together with the degree valuation at infinity. The
// trivial place is the whole field, the generic point of the
// Zariski-Riemann space.
//
// The identification of closed points with primes respectively monic
// irreducibles + infinity is classical valuation theory, an
// instantiation assumption of this library rather than a result it
// verifies.

#include <cstdint>
#include <string>

#include "zariski/ext_int.hpp"
#include "zariski/fields.hpp"
#include "zariski/irreducible.hpp"
#include "zariski/onedim.hpp"

namespace zariski {

template <typename S>
struct Place {
    enum class Kind { trivial, infinity, finite };
    Kind kind = Kind::trivial;
    typename S::PlaceKey key{};

    static Place trivial() { return Place{}; }
    static Place infinity() {
        static_assert(S::has_infinity_place);
        return Place{Kind::infinity, {}};
    }
    static Place finite(typename S::PlaceKey k) {
        return Place{Kind::finite, std::move(k)};
    }

    bool is_trivial() const { return kind == Kind::trivial; }
    bool is_infinity() const { return kind == Kind::infinity; }
    bool is_finite() const { return kind == Kind::finite; }
};

// ---- ordering, consistent with the enumeration below --------------------

inline bool place_key_less(const QOverZ&, const BigInt& a, const BigInt& b) { return a < b; }

inline bool place_key_less(const FpRational&, const Poly<Fp>& a, const Poly<Fp>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree() - 1; i >= 0; --i) {
        uint32_t av = a[static_cast<std::size_t>(i)].value();
        uint32_t bv = b[static_cast<std::size_t>(i)].value();
        if (av != bv) return av < bv;
    }
    return false;
}

inline BigInt q_poly_height(const Poly<Rational>& a) {
    BigInt h = a.degree() >= 0 ? BigInt(a.degree()) : BigInt(0);
    for (int i = 0; i < a.degree(); ++i)
        h = std::max(h, a[static_cast<std::size_t>(i)].height());
    return h;
}

inline bool place_key_less(const QRational&, const Poly<Rational>& a, const Poly<Rational>& b) {
    BigInt ha = q_poly_height(a), hb = q_poly_height(b);
    if (ha != hb) return ha < hb;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree() - 1; i >= 0; --i) {
        const Rational& av = a[static_cast<std::size_t>(i)];
        const Rational& bv = b[static_cast<std::size_t>(i)];
        if (!(av == bv)) return Rational::height_less(av, bv);
    }
    return false;
}

template <typename S>
bool place_less(const S& s, const Place<S>& a, const Place<S>& b) {
    auto rank = [](const Place<S>& p) {
        switch (p.kind) {
            case Place<S>::Kind::infinity: return 0;
            case Place<S>::Kind::finite: return 1;
            default: return 2;  // trivial sorts last; it never enters closed lists
        }
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.kind != Place<S>::Kind::finite) return false;
    return place_key_less(s, a.key, b.key);
}

template <typename S>
bool place_equal(const S& s, const Place<S>& a, const Place<S>& b) {
    return !place_less(s, a, b) && !place_less(s, b, a);
}

// ---- place validity ------------------------------------------------------

inline bool valid_place_key(const QOverZ&, const BigInt& k) { return is_prime_checked(k); }
inline bool valid_place_key(const FpRational& s, const Poly<Fp>& k) {
    if (k.degree() < 1 || !k.is_monic()) return false;
    for (const auto& c : k.coeffs())
        if (!c.is_zero() && c.modulus() != s.p) return false;
    return fp_irreducible(k);
}
inline bool valid_place_key(const QRational&, const Poly<Rational>& k) {
    if (k.degree() < 1 || !k.is_monic()) return false;
    Decision d = q_irreducible(k);
    if (d == Decision::unknown)
        throw InconclusiveError("irreducibility over Q undecided at this degree");
    return d == Decision::yes;
}

template <typename S>
bool valid_place(const S& s, const Place<S>& p) {
    switch (p.kind) {
        case Place<S>::Kind::trivial: return true;
        case Place<S>::Kind::infinity: return S::has_infinity_place;
        default: return valid_place_key(s, p.key);
    }
}

// ---- valuations -----------------------------------------------------------

inline long long poly_order(const Poly<Fp>& pi, Poly<Fp> f) {
    if (f.is_zero()) throw std::domain_error("poly_order: zero polynomial");
    long long v = 0;
    Poly<Fp> q, r;
    for (;;) {
        Poly<Fp>::divmod(f, pi, q, r);
        if (!r.is_zero()) return v;
        f = q;
        ++v;
    }
}
inline long long poly_order(const Poly<Rational>& pi, Poly<Rational> f) {
    if (f.is_zero()) throw std::domain_error("poly_order: zero polynomial");
    long long v = 0;
    Poly<Rational> q, r;
    for (;;) {
        Poly<Rational>::divmod(f, pi, q, r);
        if (!r.is_zero()) return v;
        f = q;
        ++v;
    }
}

inline ExtInt place_value(const QOverZ&, const Place<QOverZ>& v, const Rational& a) {
    if (a.is_zero()) return ExtInt::infinity();
    if (v.is_trivial()) return 0;
    return padic(v.key, a.num()) - padic(v.key, a.den());
}

template <typename S>
    requires S::function_field
ExtInt place_value(const S&, const Place<S>& v, const typename S::Elem& a) {
    if (a.is_zero()) return ExtInt::infinity();
    switch (v.kind) {
        case Place<S>::Kind::trivial: return 0;
        case Place<S>::Kind::infinity:
            return static_cast<long long>(a.den().degree()) - a.num().degree();
        default:
            return poly_order(v.key, a.num()) - poly_order(v.key, a.den());
    }
}

template <typename S>
bool in_ring(const S& s, const Place<S>& v, const typename S::Elem& a) {
    return place_value(s, v, a) >= ExtInt(0);
}

template <typename S>
bool in_max_ideal(const S& s, const Place<S>& v, const typename S::Elem& a) {
    return place_value(s, v, a) > ExtInt(0);
}

// residue field data: extension degree over the base, and characteristic
template <typename S>
int residue_degree(const S&, const Place<S>& v) {
    if (v.is_trivial())
        throw std::invalid_argument("residue_degree: the trivial place has no residue degree");
    if (v.is_infinity()) return 1;
    if constexpr (S::function_field) {
        return v.key.degree();
    } else {
        return 1;
    }
}

inline BigInt residue_characteristic(const QOverZ&, const Place<QOverZ>& v) {
    if (v.is_trivial()) return 0;
    return v.key;
}
inline BigInt residue_characteristic(const FpRational& s, const Place<FpRational>&) {
    return BigInt(static_cast<long long>(s.p));
}
inline BigInt residue_characteristic(const QRational&, const Place<QRational>&) { return 0; }

// ---- the Zariski-Riemann space as a one-dimensional space ----------------

template <typename S>
Place<S> nth_place(const S& s, std::size_t i) {
    if constexpr (S::has_infinity_place) {
        if (i == 0) return Place<S>::infinity();
        if constexpr (std::is_same_v<S, FpRational>) {
            return Place<S>::finite(fp_nth_irreducible(s.p, i - 1));
        } else {
            return Place<S>::finite(q_nth_irreducible(i - 1));
        }
    } else {
        return Place<S>::finite(BigInt(static_cast<long long>(nth_prime(i))));
    }
}

template <typename S>
OneDimSpace<Place<S>> zr_space(const S& s) {
    return OneDimSpace<Place<S>>::infinite_space(
        [s](std::size_t i) { return nth_place(s, i); },
        [s](const Place<S>& p) { return !p.is_trivial() && valid_place(s, p); },
        [s](const Place<S>& a, const Place<S>& b) { return place_less(s, a, b); });
}

// ---- membership in an intersection of valuation rings --------------------

namespace detail {
// divide out every factor of pi from f, returning the cofactor
template <typename P>
P strip_factor(const P& pi, P f) {
    P q, r;
    for (;;) {
        P::divmod(f, pi, q, r);
        if (!r.is_zero()) return f;
        f = q;
    }
}
inline BigInt strip_factor_int(const BigInt& p, BigInt n) {
    BigInt q, r;
    for (;;) {
        BigInt::divmod(n, p, q, r);
        if (!r.is_zero()) return n;
        n = q;
    }
}
}  // namespace detail

// a lies in every valuation ring of the subset z (the generic point, the
// whole field, imposes nothing); exact on finite/cofinite descriptions
template <typename S>
bool intersection_member(const S& s, const SubsetDesc<Place<S>>& z,
                         const typename S::Elem& a) {
    using Sub = SubsetDesc<Place<S>>;
    if (a.is_zero()) return true;
    if (z.part == Sub::Part::finite) {
        for (const auto& v : z.keys)
            if (!in_ring(s, v, a)) return false;
        return true;
    }
    // cofinite: poles must be confined to the excluded list
    if constexpr (S::function_field) {
        bool infinity_excluded = false;
        auto den = a.den();
        for (const auto& v : z.keys) {
            if (v.is_infinity()) {
                infinity_excluded = true;
                continue;
            }
            den = detail::strip_factor(v.key, den);
        }
        if (!den.is_constant()) return false;
        if (!infinity_excluded && a.num().degree() > a.den().degree()) return false;
        return true;
    } else {
        BigInt den = a.den();
        for (const auto& v : z.keys) den = detail::strip_factor_int(v.key, den);
        return den.is_one();
    }
}

}  // namespace zariski
