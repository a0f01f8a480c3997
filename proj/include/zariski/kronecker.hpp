#pragma once

// Kronecker and Nagata function ring membership, the star operation at
// the level of Gauss values, inverse-closure and pt correspondences
// certified by separating elements, affine-scheme tests, and the
// explicit invertibility witness behind the geometric characterization
// of Prüfer domains.
//
// Kr(Z) is represented intensionally: membership queries only, decided
// exactly by content/denominator analysis on the finite exceptional
// sets. It is never materialized.

#include <optional>
#include <string>
#include <vector>

#include "zariski/grammar.hpp"
#include "zariski/models.hpp"
#include "zariski/tpoly.hpp"

namespace zariski {

struct NotAffineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroElementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- contents and denominators -------------------------------------------

namespace detail {

// integer content data of a T-polynomial over Q: clear denominators with
// the lcm D, take the gcd c of the resulting integer coefficients; then
// for every prime v: gauss_v(f) = v(c) - v(D)
struct IntContent {
    BigInt content;  // >= 0
    BigInt denom;    // > 0
};

inline IntContent int_content(const TPoly<QOverZ>& f) {
    IntContent r{BigInt(0), BigInt(1)};
    for (const auto& c : f.coeffs()) {
        BigInt g = BigInt::gcd(r.denom, c.den());
        r.denom = r.denom / g * c.den();
    }
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        BigInt scaled = c.num() * (r.denom / c.den());
        r.content = BigInt::gcd(r.content, scaled);
    }
    return r;
}

template <typename K>
struct PolyContent {
    Poly<K> content;  // monic gcd of cleared numerators
    Poly<K> denom;    // monic lcm of coefficient denominators
};

template <typename K>
PolyContent<K> poly_content(const Poly<RatFunc<K>>& f) {
    PolyContent<K> r;
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        if (r.denom.is_zero()) {
            r.denom = c.den();
        } else {
            Poly<K> g = Poly<K>::gcd(r.denom, c.den());
            r.denom = (r.denom / g * c.den()).monic();
        }
    }
    for (const auto& c : f.coeffs()) {
        if (c.is_zero()) continue;
        Poly<K> cleared = c.num() * (r.denom / c.den());
        r.content = r.content.is_zero() ? cleared.monic() : Poly<K>::gcd(r.content, cleared);
    }
    return r;
}

}  // namespace detail

// ---- Kr(Z) membership -------------------------------------------------------

// h lies in the Kronecker function ring of Z: at every non-trivial place
// of Z the Gauss value of h is nonnegative. Exact on finite and cofinite
// descriptions.
template <typename S>
bool in_kronecker(const S& s, const OneDimSpace<Place<S>>&,
                  const SubsetDesc<Place<S>>& z, const TRational<S>& h) {
    using Sub = SubsetDesc<Place<S>>;
    if (h.num.is_zero()) return true;
    if (z.part == Sub::Part::finite) {
        for (const auto& v : z.keys)
            if (!in_star(s, v, h)) return false;
        return true;
    }
    // cofinite: compare contents away from the excluded places
    if constexpr (S::function_field) {
        auto nc = detail::poly_content(h.num);
        auto dc = detail::poly_content(h.den);
        // finite places: need v(ncont * ddenom) >= v(dcont * ndenom)
        auto lhs = nc.content * dc.denom;
        auto rhs = dc.content * nc.denom;
        auto g = Poly<typename S::Coeff>::gcd(lhs, rhs);
        auto deficit = rhs / g;  // places where the condition might fail
        bool infinity_excluded = false;
        for (const auto& v : z.keys) {
            if (v.is_infinity()) {
                infinity_excluded = true;
                continue;
            }
            deficit = detail::strip_factor(v.key, deficit);
        }
        if (!deficit.is_constant()) return false;
        if (!infinity_excluded &&
            !(gauss_value(s, Place<S>::infinity(), h) >= ExtInt(0)))
            return false;
        return true;
    } else {
        auto nc = detail::int_content(h.num);
        auto dc = detail::int_content(h.den);
        BigInt lhs = nc.content * dc.denom;
        BigInt rhs = dc.content * nc.denom;
        BigInt g = BigInt::gcd(lhs, rhs);
        BigInt deficit = rhs / g;
        for (const auto& v : z.keys) deficit = detail::strip_factor_int(v.key, deficit);
        return deficit.abs().is_one();
    }
}

// ---- classical content criterion and the Nagata ring -----------------------

// over a principal ideal base the integral closure of a content ideal is
// itself, so membership in Kr of the full space is divisibility of the
// integer contents
inline bool content_criterion(const TPoly<QOverZ>& f, const TPoly<QOverZ>& g) {
    if (g.is_zero()) throw ZeroElementError("content_criterion: zero denominator");
    for (const auto& c : f.coeffs())
        if (!c.is_integer())
            throw std::invalid_argument("content_criterion: integer coefficients required");
    for (const auto& c : g.coeffs())
        if (!c.is_integer())
            throw std::invalid_argument("content_criterion: integer coefficients required");
    if (f.is_zero()) return true;
    BigInt cf = detail::int_content(f).content;
    BigInt cg = detail::int_content(g).content;
    return (cf % cg).is_zero();
}

// membership of the representation f/g in the Nagata ring: the content
// of g must be the unit ideal of the base
template <typename S>
bool in_nagata(const S&, const TPoly<S>& f, const TPoly<S>& g) {
    if (g.is_zero()) throw ZeroElementError("in_nagata: zero denominator");
    if constexpr (S::function_field) {
        for (const auto& c : f.coeffs())
            if (!c.is_constant())
                throw std::invalid_argument("in_nagata: coefficients must lie in the base field");
        for (const auto& c : g.coeffs())
            if (!c.is_constant())
                throw std::invalid_argument("in_nagata: coefficients must lie in the base field");
        return true;  // any nonzero coefficient of g is a unit of the base field
    } else {
        for (const auto& c : f.coeffs())
            if (!c.is_integer())
                throw std::invalid_argument("in_nagata: integer coefficients required");
        for (const auto& c : g.coeffs())
            if (!c.is_integer())
                throw std::invalid_argument("in_nagata: integer coefficients required");
        return detail::int_content(g).content.is_one();
    }
}

// ---- inverse closure via Kr, with separating-element certificates ----------

template <typename S>
struct KrSeparator {
    Place<S> excluded;           // probed place outside the inverse closure
    typename S::Elem element;    // in Kr(Z) but not in the star of the place
};

template <typename S>
struct InvViaKrResult {
    SubsetDesc<Place<S>> inv;
    std::vector<KrSeparator<S>> separators;
    std::size_t probe = 0;
};

// The inverse closure collapses to the closure under generalizations in
// these Noetherian settings; every probed place left outside is
// certified by a verified separating element of Kr(Z).
template <typename S>
InvViaKrResult<S> inv_via_kronecker(const S& s, const OneDimSpace<Place<S>>& space,
                                    const SubsetDesc<Place<S>>& z, std::size_t probe = 64) {
    InvViaKrResult<S> out;
    out.probe = probe;
    out.inv = space.inv(z);
    if (z.is_empty()) return out;  // Kr(empty) is all of F(T): nothing separates
    for (std::size_t i = 0; i < probe; ++i) {
        Place<S> w = nth_place(s, i);
        if (space.contains_key(out.inv, w)) continue;
        typename S::Elem sep;
        if constexpr (S::function_field) {
            sep = w.is_infinity() ? s.x()
                                  : typename S::Elem(Poly<typename S::Coeff>(w.key.unit_one()),
                                                     w.key);
        } else {
            sep = Rational(BigInt(1), w.key);
        }
        TRational<S> ht{TPoly<S>(Poly<typename S::Elem>(sep))};
        if (!in_kronecker(s, space, z, ht))
            throw std::logic_error("inv_via_kronecker: separator not in Kr(Z)");
        if (in_star(s, w, ht))
            throw std::logic_error("inv_via_kronecker: separator fails to separate");
        out.separators.push_back(KrSeparator<S>{w, sep});
    }
    return out;
}

// ---- the ring of global sections --------------------------------------------

enum class RingKind { field, constants, semilocal_pid, dedekind_complement };

template <typename S>
struct RingDesc {
    RingKind kind = RingKind::field;
    std::vector<Place<S>> places;  // semilocal: the places; complement: allowed poles
};

template <typename S>
RingDesc<S> ring_desc(const S&, const SubsetDesc<Place<S>>& z) {
    using Sub = SubsetDesc<Place<S>>;
    RingDesc<S> r;
    if (z.part == Sub::Part::finite) {
        r.kind = z.keys.empty() ? RingKind::field : RingKind::semilocal_pid;
        r.places = z.keys;
    } else {
        r.kind = z.keys.empty() ? RingKind::constants : RingKind::dedekind_complement;
        r.places = z.keys;
    }
    return r;
}

inline std::string ring_kind_name(RingKind k) {
    switch (k) {
        case RingKind::field: return "field";
        case RingKind::constants: return "constants";
        case RingKind::semilocal_pid: return "semilocal-pid";
        default: return "dedekind-complement";
    }
}

// membership in A = intersection of the valuation rings of Z (equal to
// the intersection over the inverse closure)
template <typename S>
bool ring_member(const S& s, const SubsetDesc<Place<S>>& z, const typename S::Elem& a) {
    return intersection_member(s, z, a);
}

// ---- the affine-scheme test ---------------------------------------------------

template <typename S>
struct AffineTestResult {
    bool affine = false;
    RingKind ring = RingKind::field;
    std::string reason;
};

// affine iff inverse closed and the ring of global sections is a
// Prüfer domain with quotient field F
template <typename S>
AffineTestResult<S> affine_test(const S& s, const OneDimSpace<Place<S>>& space,
                                const SubsetDesc<Place<S>>& z) {
    AffineTestResult<S> out;
    auto desc = ring_desc(s, z);
    out.ring = desc.kind;
    if (!space.equal(z, space.inv(z))) {
        out.reason = "not inverse closed: the closure under generalizations is larger";
        return out;
    }
    if constexpr (S::function_field) {
        if (desc.kind == RingKind::constants) {
            out.reason = "sections are the base-field constants: quotient field is not F";
            return out;
        }
    }
    out.affine = true;
    switch (desc.kind) {
        case RingKind::field: out.reason = "sections form the whole field F"; break;
        case RingKind::constants: out.reason = "sections are the integers, a principal ideal domain with quotient field F"; break;
        case RingKind::semilocal_pid: out.reason = "sections form a semilocal principal ideal domain"; break;
        default: out.reason = "sections form a Dedekind-type ring with poles confined to the complement"; break;
    }
    return out;
}

// ---- the invertibility witness -------------------------------------------------

template <typename S>
struct PruferWitness {
    typename S::Elem ideal_gen;                       // d with (t_0..t_n)A = dA
    std::vector<typename S::Elem> b;                  // 1 = sum b_i
    std::vector<std::vector<typename S::Elem>> a;     // b_i t_j = a_ij t_i
    std::vector<typename S::Elem> ring_gens;          // the b's and a's
};

namespace detail {

// iterated extended gcd: g = gcd(v_0..v_k) = sum u_i v_i
template <typename R>
R multi_egcd(const std::vector<R>& v, std::vector<R>& u) {
    u.assign(v.size(), R{});
    R x, y;
    R g = R::egcd(v[0], R{}, x, y);
    u[0] = x;
    for (std::size_t i = 1; i < v.size(); ++i) {
        R a, b;
        R g2 = R::egcd(g, v[i], a, b);
        for (std::size_t j = 0; j < i; ++j) u[j] = u[j] * a;
        u[i] = b;
        g = g2;
    }
    return g;
}

}  // namespace detail

// forward declaration for the coordinate-flip path
template <typename S>
PruferWitness<S> prufer_witness(const S& s, const OneDimSpace<Place<S>>& space,
                                const SubsetDesc<Place<S>>& z,
                                const std::vector<typename S::Elem>& tuple);

namespace detail {

// substitute x -> r in a function-field element, exactly
template <typename S>
typename S::Elem elem_compose(const typename S::Elem& e, const typename S::Elem& r) {
    using E = typename S::Elem;
    if (e.is_zero()) return e;
    auto horner = [&](const auto& poly) {
        E acc{};
        for (int i = poly.degree(); i >= 0; --i)
            acc = acc * r + E(Poly(poly[static_cast<std::size_t>(i)]));
        return acc;
    };
    return horner(e.num()) / horner(e.den());
}

// pull a place through the substitution x -> c + 1/x: infinity moves to
// the place at zero, x - c moves to infinity, other keys compose
template <typename S>
Place<S> place_transform_flip(const S& s, const Place<S>& v, const typename S::Elem& r_fwd,
                              const typename S::Coeff& c) {
    using P = Place<S>;
    (void)s;
    typename S::Coeff one = r_fwd.num().unit_one();
    if (v.is_infinity()) return P::finite(Poly<typename S::Coeff>::monomial(one, 1));
    Poly<typename S::Coeff> xc{std::vector<typename S::Coeff>{-c, one}};
    if (v.key == xc) return P::infinity();
    typename S::Elem img = elem_compose<S>(typename S::Elem(v.key), r_fwd);
    Poly<typename S::Coeff> key = img.num().monic();
    if (key.degree() != v.key.degree())
        throw std::logic_error("place_transform_flip: degree drop");
    return P::finite(key);
}

}  // namespace detail

// Constructs d, b and a with (t_0..t_n)A = dA, 1 = sum b_i and
// b_i t_j = a_ij t_i, all entries in A; every identity and membership is
// verified before returning. Requires an affine subset; the PID cases
// with the infinite place inside the closed part are handled by the
// coordinate flip x -> c + 1/x with x - c outside the place set.
template <typename S>
PruferWitness<S> prufer_witness(const S& s, const OneDimSpace<Place<S>>& space,
                                const SubsetDesc<Place<S>>& z,
                                const std::vector<typename S::Elem>& tuple) {
    using E = typename S::Elem;
    using Sub = SubsetDesc<Place<S>>;
    if (tuple.empty()) throw ZeroElementError("prufer_witness: empty tuple");
    for (const auto& t : tuple)
        if (t.is_zero()) throw ZeroElementError("prufer_witness: zero tuple entry");
    auto aff = affine_test(s, space, z);
    if (!aff.affine) throw NotAffineError("prufer_witness: " + aff.reason);

    const std::size_t n = tuple.size();
    auto finish = [&](E d, std::vector<E> b) {
        PruferWitness<S> w;
        w.ideal_gen = std::move(d);
        w.b = std::move(b);
        // verify 1 = sum b_i
        E sum{};
        for (const auto& bi : w.b) sum = sum + bi;
        E one = tuple[0] / tuple[0];
        if (!(sum == one)) throw std::logic_error("prufer_witness: partition of unity fails");
        w.a.assign(n, std::vector<E>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                w.a[i][j] = w.b[i] * tuple[j] / tuple[i];
                if (!(w.a[i][j] * tuple[i] == w.b[i] * tuple[j]))
                    throw std::logic_error("prufer_witness: cross relation fails");
            }
        for (const auto& bi : w.b) {
            if (!ring_member(s, z, bi))
                throw std::logic_error("prufer_witness: b entry escapes the ring");
            w.ring_gens.push_back(bi);
        }
        for (const auto& row : w.a)
            for (const auto& aij : row) {
                if (!ring_member(s, z, aij))
                    throw std::logic_error("prufer_witness: a entry escapes the ring");
                w.ring_gens.push_back(aij);
            }
        return w;
    };

    // field of fractions: everything is a unit
    if (z.part == Sub::Part::finite && z.keys.empty()) {
        std::vector<E> b(n, E{});
        b[0] = tuple[0] / tuple[0];
        return finish(tuple[0], std::move(b));
    }

    if constexpr (S::function_field) {
        bool infinity_inside = space.contains_key(z, Place<S>::infinity());
        if (infinity_inside) {
            // choose c with the place x - c outside the closed part
            std::optional<typename S::Coeff> c;
            auto try_c = [&](typename S::Coeff cand) {
                Poly<typename S::Coeff> xc{std::vector<typename S::Coeff>{
                    -cand, tuple[0].num().unit_one()}};
                if (!space.contains_key(z, Place<S>::finite(xc))) c = cand;
            };
            if constexpr (std::is_same_v<S, FpRational>) {
                for (uint32_t k = 0; k < s.p && !c; ++k) try_c(Fp(k, s.p));
            } else {
                for (long long h = 0; h <= 64 && !c; ++h)
                    for (const auto& r : rationals_of_height(h)) {
                        try_c(r);
                        if (c) break;
                    }
            }
            if (!c)
                throw InconclusiveError(
                    "prufer_witness: no rational place available for the coordinate flip");
            // x -> c + 1/x and its inverse x -> 1/(x - c)
            E x = s.x();
            E cc = E(Poly<typename S::Coeff>(*c));
            E r_fwd = cc + (x / x) / x;
            E r_bwd = (x / x) / (x - cc);
            // transform the subset
            std::vector<Place<S>> keys2;
            for (const auto& v : z.keys)
                keys2.push_back(detail::place_transform_flip(s, v, r_fwd, *c));
            Sub z2 = z.part == Sub::Part::finite ? space.make_finite(keys2, z.has_generic)
                                                 : space.make_cofinite(keys2, z.has_generic);
            std::vector<E> tuple2;
            for (const auto& t : tuple) tuple2.push_back(detail::elem_compose<S>(t, r_fwd));
            auto w2 = prufer_witness(s, space, z2, tuple2);
            // transform everything back
            std::vector<E> b;
            for (const auto& bi : w2.b) b.push_back(detail::elem_compose<S>(bi, r_bwd));
            return finish(detail::elem_compose<S>(w2.ideal_gen, r_bwd), std::move(b));
        }

        // gcd of reduced fractions: gcd of numerators over lcm of denominators
        using K = typename S::Coeff;
        Poly<K> gn, ld;
        for (const auto& t : tuple) {
            gn = gn.is_zero() ? t.num().monic() : Poly<K>::gcd(gn, t.num());
            if (ld.is_zero()) {
                ld = t.den();
            } else {
                Poly<K> g = Poly<K>::gcd(ld, t.den());
                ld = (ld / g * t.den()).monic();
            }
        }
        E d = E(gn, ld);
        std::vector<E> scaled;
        for (const auto& t : tuple) {
            E si = t / d;
            if (!ring_member(s, z, si))
                throw std::logic_error("prufer_witness: scaled entry escapes the ring");
            scaled.push_back(si);
        }
        // clear denominators (supported outside the place set) and run
        // the polynomial Bezout chain
        Poly<K> m;
        for (const auto& si : scaled) {
            if (m.is_zero()) {
                m = si.den();
            } else {
                Poly<K> g = Poly<K>::gcd(m, si.den());
                m = (m / g * si.den()).monic();
            }
        }
        std::vector<Poly<K>> cleared;
        for (const auto& si : scaled) {
            E v = si * E(m);
            if (!v.is_polynomial()) throw std::logic_error("prufer_witness: clearing failed");
            cleared.push_back(v.num());
        }
        std::vector<Poly<K>> u;
        Poly<K> g = detail::multi_egcd(cleared, u);
        std::vector<E> b;
        for (std::size_t i = 0; i < n; ++i)
            b.push_back(E(u[i]) * E(m) / E(g) * scaled[i]);
        return finish(d, std::move(b));
    } else {
        // rational gcd: gcd of numerators over lcm of denominators
        BigInt gn = 0, ld = 1;
        for (const auto& t : tuple) {
            gn = BigInt::gcd(gn, t.num());
            BigInt g = BigInt::gcd(ld, t.den());
            ld = ld / g * t.den();
        }
        E d = Rational(gn, ld);
        std::vector<E> scaled;
        for (const auto& t : tuple) {
            E si = t / d;
            if (!ring_member(s, z, si))
                throw std::logic_error("prufer_witness: scaled entry escapes the ring");
            scaled.push_back(si);
        }
        BigInt m = 1;
        for (const auto& si : scaled) {
            BigInt g = BigInt::gcd(m, si.den());
            m = m / g * si.den();
        }
        std::vector<BigInt> cleared;
        for (const auto& si : scaled) {
            Rational v = si * Rational(m);
            if (!v.is_integer()) throw std::logic_error("prufer_witness: clearing failed");
            cleared.push_back(v.num());
        }
        std::vector<BigInt> u;
        BigInt g = detail::multi_egcd(cleared, u);
        std::vector<E> b;
        for (std::size_t i = 0; i < n; ++i)
            b.push_back(Rational(u[i]) * Rational(m) / Rational(g) * scaled[i]);
        return finish(d, std::move(b));
    }
}

// ---- pt via maximal ideals ------------------------------------------------------

template <typename S>
struct PtCertificate {
    Place<S> place;
    TRational<S> element;  // in Kr(Z), positive Gauss value at the place
};

template <typename S>
struct PtViaMaxResult {
    SubsetDesc<Place<S>> pt;
    std::vector<PtCertificate<S>> certificates;
    std::size_t probe = 0;
};

// pt(Z) through the maximal spectrum of Kr(Z): on probed members the
// Gauss extension is certified maximal by an element of Kr(Z) inside its
// center, and no probed distinct member specializes to it
template <typename S>
PtViaMaxResult<S> pt_via_max(const S& s, const OneDimSpace<Place<S>>& space,
                             const SubsetDesc<Place<S>>& z, std::size_t probe = 64) {
    PtViaMaxResult<S> out;
    out.probe = probe;
    out.pt = space.pt(z);
    auto certify = [&](const Place<S>& v) {
        if (v.is_trivial()) return;  // only the pure generic subset reaches here
        TRational<S> cert;
        if constexpr (S::function_field) {
            if (v.is_infinity()) {
                // (T + 1) / (x T + 1)
                auto one = Poly<typename S::Elem>(s.one());
                auto t1 = TPoly<S>::monomial(s.one(), 1) + one;
                auto xt1 = TPoly<S>::monomial(s.x(), 1) + one;
                cert = TRational<S>(t1, xt1);
            } else {
                // pi (T^d + 1) / (T^d + pi)
                int d = v.key.degree();
                typename S::Elem pi = typename S::Elem(v.key);
                auto td = TPoly<S>::monomial(s.one(), static_cast<std::size_t>(d));
                auto num = TPoly<S>(Poly<typename S::Elem>(pi)) *
                           (td + TPoly<S>(Poly<typename S::Elem>(s.one())));
                auto den = td + TPoly<S>(Poly<typename S::Elem>(pi));
                cert = TRational<S>(num, den);
            }
        } else {
            // p (T + 1) / (T + p)
            Rational p(v.key);
            auto one = TPoly<S>(Poly<Rational>(Rational(1)));
            auto num = TPoly<S>(Poly<Rational>(p)) * (TPoly<S>::monomial(Rational(1), 1) + one);
            auto den = TPoly<S>::monomial(Rational(1), 1) + TPoly<S>(Poly<Rational>(p));
            cert = TRational<S>(num, den);
        }
        if (!in_kronecker(s, space, z, cert))
            throw std::logic_error("pt_via_max: certificate not in Kr(Z)");
        if (!(gauss_value(s, v, cert) > ExtInt(0)))
            throw std::logic_error("pt_via_max: certificate not inside the center");
        // maximality among probed members of the inverse closure: distinct
        // closed points of this space shape never specialize to one
        // another, so a positive-value certificate settles it
        out.certificates.push_back(PtCertificate<S>{v, cert});
    };
    if (out.pt.part == SubsetDesc<Place<S>>::Part::finite) {
        std::size_t count = 0;
        for (const auto& v : out.pt.keys) {
            if (count++ >= probe) break;
            certify(v);
        }
    } else {
        for (std::size_t i = 0; i < probe; ++i) {
            Place<S> w = nth_place(s, i);
            if (space.contains_key(out.pt, w)) certify(w);
        }
    }
    return out;
}

// ---- localizations -----------------------------------------------------------

// the subset Y of the inverse closure representing A_S: remove the
// places where some inverted element has positive value, keep the
// generic point
template <typename S>
SubsetDesc<Place<S>> localization_subset(const S& s, const OneDimSpace<Place<S>>& space,
                                         const SubsetDesc<Place<S>>& z,
                                         const std::vector<typename S::Elem>& inverted) {
    auto inv = space.inv(z);
    std::vector<Place<S>> removed;
    for (const auto& e : inverted) {
        if (e.is_zero()) throw ZeroElementError("localization_subset: zero element");
        if (!ring_member(s, z, e))
            throw std::invalid_argument("localization_subset: element outside the ring");
        if constexpr (S::function_field) {
            if constexpr (std::is_same_v<S, FpRational>) {
                for (const auto& [pi, mult] : fp_factor(e.num()))
                    removed.push_back(Place<S>::finite(pi));
            } else {
                for (const auto& [pi, mult] : q_factor_bounded(e.num()))
                    removed.push_back(Place<S>::finite(pi));
            }
            if (place_value(s, Place<S>::infinity(), e) > ExtInt(0))
                removed.push_back(Place<S>::infinity());
        } else {
            for (const auto& [p, mult] : factor_integer(e.num()))
                removed.push_back(Place<S>::finite(p));
        }
    }
    auto removal = space.make_finite(std::move(removed), false);
    auto y = space.intersect(inv, space.complement(removal));
    y.has_generic = true;
    return y;
}

// exact membership in the localization A_S, by pole analysis against the
// inverted elements
template <typename S>
bool in_localization(const S& s, const OneDimSpace<Place<S>>& space,
                     const SubsetDesc<Place<S>>& z,
                     const std::vector<typename S::Elem>& inverted,
                     const typename S::Elem& a) {
    if (a.is_zero()) return true;
    std::vector<Place<S>> poles;
    if constexpr (S::function_field) {
        if constexpr (std::is_same_v<S, FpRational>) {
            for (const auto& [pi, mult] : fp_factor(a.den())) poles.push_back(Place<S>::finite(pi));
        } else {
            for (const auto& [pi, mult] : q_factor_bounded(a.den()))
                poles.push_back(Place<S>::finite(pi));
        }
        if (place_value(s, Place<S>::infinity(), a) < ExtInt(0))
            poles.push_back(Place<S>::infinity());
    } else {
        for (const auto& [p, mult] : factor_integer(a.den())) poles.push_back(Place<S>::finite(p));
    }
    for (const auto& v : poles) {
        if (!space.contains_key(z, v) ) continue;  // pole outside the ring's places
        bool killable = false;
        for (const auto& e : inverted)
            if (place_value(s, v, e) > ExtInt(0)) {
                killable = true;
                break;
            }
        if (!killable) return false;
    }
    return true;
}

// ---- residue-field root avoidance ----------------------------------------------

template <typename S>
struct BasePolyFor {
    using type = Poly<Rational>;
};
template <>
struct BasePolyFor<FpRational> {
    using type = Poly<Fp>;
};

template <typename S>
struct NoRootResult {
    bool representable = false;
    SubsetDesc<Place<S>> subset;  // valid when representable
    std::vector<std::pair<Place<S>, Decision>> probed;  // membership per probed place
    Decision generic = Decision::unknown;
    std::string note;
};

namespace detail {

inline bool fp_poly_has_root_in_ext(const Poly<Fp>& m, uint32_t p, int d) {
    // roots in F_{p^d}: common factors with T^{p^d} - T
    double e = 1;
    for (int i = 0; i < d; ++i) {
        e *= p;
        if (e > 9.0e18) throw InconclusiveError("root test: extension too large");
    }
    uint64_t exp = 1;
    for (int i = 0; i < d; ++i) exp *= p;
    Poly<Fp> t = Poly<Fp>::monomial(Fp(1, p), 1);
    Poly<Fp> frob = Poly<Fp>::powmod(t, exp, m);
    Poly<Fp> diff = frob - t;
    if (diff.is_zero()) return true;  // m divides T^{p^d} - T entirely
    return Poly<Fp>::gcd(m, diff).degree() > 0;
}

inline bool int_poly_has_root_mod_p(const Poly<Rational>& m, const BigInt& p) {
    static const BigInt kBound = BigInt(1) * BigInt(1 << 20);
    if (p > kBound) throw InconclusiveError("root test: prime beyond brute-force bound");
    uint32_t pv = static_cast<uint32_t>(p.to_int64());
    auto mp = reduce_mod_p(m, pv);
    if (!mp) throw std::logic_error("int_poly_has_root_mod_p: denominator at p");
    for (uint32_t t = 0; t < pv; ++t)
        if (mp->eval(Fp(t, pv)).is_zero()) return true;
    return false;
}

}  // namespace detail

// The set of places whose residue field contains no root of the monic
// polynomial m over the base. Returns an exact description when one is
// certifiable (empty set when m has a root in the base, which embeds in
// every residue field; certified non-representable over F_p(x) when it
// does not), and a probe-bounded view otherwise.
template <typename S>
NoRootResult<S> monic_no_root_subset(const S& s, const OneDimSpace<Place<S>>& space,
                                     const typename BasePolyFor<S>::type& m,
                                     std::size_t probe = 64) {
    NoRootResult<S> out;
    if (m.degree() < 1 || !m.is_monic())
        throw std::invalid_argument("monic_no_root_subset: monic nonconstant input required");

    if constexpr (std::is_same_v<S, FpRational>) {
        bool base_root = detail::fp_poly_has_root_in_ext(m, s.p, 1);
        if (base_root) {
            out.representable = true;
            out.subset = space.empty();
            out.generic = Decision::no;
            out.note = "a base-field root embeds in every residue field";
            return out;
        }
        out.representable = false;
        out.note =
            "certified non-representable: degree-one places avoid roots while multiples of a "
            "factor degree admit them, both in infinite number";
        out.generic = Decision::yes;  // roots of constant polynomials in F_p(x) lie in F_p
        for (std::size_t i = 0; i < probe; ++i) {
            Place<S> v = nth_place(s, i);
            int d = v.is_infinity() ? 1 : v.key.degree();
            bool root = detail::fp_poly_has_root_in_ext(m, s.p, d);
            out.probed.emplace_back(v, root ? Decision::no : Decision::yes);
        }
        return out;
    } else {
        if constexpr (std::is_same_v<S, QOverZ>) {
            for (const auto& c : m.coeffs())
                if (!c.is_integer())
                    throw std::invalid_argument(
                        "monic_no_root_subset: integer coefficients required");
        }
        bool q_root = q_has_rational_root(m);
        if (q_root) {
            out.representable = true;
            out.subset = space.empty();
            out.generic = Decision::no;
            out.note = "a rational root embeds in every residue field";
            return out;
        }
        out.generic = Decision::yes;  // no root in Q, hence none in Q(x) for constant coefficients
        if constexpr (std::is_same_v<S, QOverZ>) {
            out.representable = false;
            out.note = "probe-bounded view: representability undetermined at desk scale";
            for (std::size_t i = 0; i < probe; ++i) {
                Place<S> v = nth_place(s, i);
                bool root = detail::int_poly_has_root_mod_p(m, v.key);
                out.probed.emplace_back(v, root ? Decision::no : Decision::yes);
            }
        } else {
            out.representable = false;
            out.note = "probe-bounded view: residue fields of higher-degree places undecided";
            for (std::size_t i = 0; i < probe; ++i) {
                Place<S> v = nth_place(s, i);
                if (v.is_infinity() || v.key.degree() == 1) {
                    out.probed.emplace_back(v, Decision::yes);  // residue field is Q
                } else {
                    out.probed.emplace_back(v, Decision::unknown);
                }
            }
        }
        return out;
    }
}

}  // namespace zariski
