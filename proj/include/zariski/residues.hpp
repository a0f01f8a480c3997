#pragma once

// Residues of function-field elements at places, and canonical keys for
// closed points of affine space over the residue fields.
//
// Over F_p the residues at a place of degree d live in F_{p^d}; a tuple
// of residues cuts out a closed point of affine m-space whose canonical
// key is the lexicographically least element of its Frobenius orbit,
// written in a canonical model F_p[u]/(C_e) of the subfield the tuple
// generates (C_e = first monic irreducible of degree e in enumeration
// order). Over Q only rational residue tuples are supported; anything
// else is a typed error, never a silent wrong answer.

#include <vector>

#include "zariski/grammar.hpp"
#include "zariski/irreducible.hpp"
#include "zariski/places.hpp"

namespace zariski {

struct UnsupportedResidueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- arithmetic in F_p[x]/(pi) -------------------------------------------

inline Poly<Fp> fpmod_mul(const Poly<Fp>& a, const Poly<Fp>& b, const Poly<Fp>& pi) {
    return a * b % pi;
}

inline Poly<Fp> fpmod_inv(const Poly<Fp>& a, const Poly<Fp>& pi) {
    Poly<Fp> x, y;
    Poly<Fp> g = Poly<Fp>::egcd(a % pi, pi, x, y);
    if (!g.is_one()) throw std::domain_error("fpmod_inv: not invertible");
    return x % pi;
}

inline Poly<Fp> fpmod_pow(Poly<Fp> a, uint64_t e, const Poly<Fp>& pi) {
    return Poly<Fp>::powmod(std::move(a), e, pi);
}

// residue of a at the place pi, requiring value >= 0: strip pi powers
// from numerator and denominator, then divide in the residue field
template <typename K>
Poly<K> residue_at_poly_place(const Poly<K>& pi, const RatFunc<K>& a) {
    if (a.is_zero()) return Poly<K>{};
    Poly<K> num = a.num(), den = a.den();
    long long vn = 0, vd = 0;
    Poly<K> q, r;
    for (;;) {
        Poly<K>::divmod(num, pi, q, r);
        if (!r.is_zero()) break;
        num = q;
        ++vn;
    }
    for (;;) {
        Poly<K>::divmod(den, pi, q, r);
        if (!r.is_zero()) break;
        den = q;
        ++vd;
    }
    if (vn < vd) throw std::domain_error("residue_at_poly_place: negative value");
    if (vn > vd) return Poly<K>{};
    Poly<K> x, y;
    Poly<K> g = Poly<K>::egcd(den % pi, pi, x, y);
    if (!g.is_one()) throw std::domain_error("residue_at_poly_place: denominator not a unit");
    return num % pi * x % pi;
}

// residue at infinity: 0 for positive value, leading-coefficient ratio
// for value zero
template <typename S>
    requires S::function_field
auto residue_at_infinity(const S& s, const typename S::Elem& a) {
    if (a.is_zero()) return s.scalar(0);
    long long v = static_cast<long long>(a.den().degree()) - a.num().degree();
    if (v < 0) throw std::domain_error("residue_at_infinity: negative value");
    if (v > 0) return s.scalar(0);
    return a.num().leading() / a.den().leading();
}

// ---- canonical residue keys ------------------------------------------------

// the first monic irreducible of degree e over F_p in enumeration order
inline const Poly<Fp>& fp_canonical_irreducible(uint32_t p, int e) {
    static std::map<std::pair<uint32_t, int>, Poly<Fp>> cache;
    auto it = cache.find({p, e});
    if (it != cache.end()) return it->second;
    for (const auto& f : fp_monics_of_degree(p, e))
        if (fp_irreducible(f)) return cache.emplace(std::make_pair(p, e), f).first->second;
    throw std::logic_error("fp_canonical_irreducible: none found");
}

// residue tuples over F_p in canonical orbit normal form
struct FpResidueKey {
    uint32_t p = 0;
    uint32_t ext_degree = 1;                       // e: tuple generates F_{p^e}
    std::vector<std::vector<uint32_t>> coords;     // per residue, e coefficients over F_p

    friend bool operator==(const FpResidueKey& a, const FpResidueKey& b) = default;
    friend bool operator<(const FpResidueKey& a, const FpResidueKey& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.ext_degree != b.ext_degree) return a.ext_degree < b.ext_degree;
        return a.coords < b.coords;
    }
};

namespace detail {

// all elements of F_p[x]/(pi) in deterministic order, as polynomials
inline std::vector<Poly<Fp>> all_field_elements(uint32_t p, const Poly<Fp>& pi) {
    int d = pi.degree();
    double count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    if (count > 65536.0)
        throw InconclusiveError("residue canonicalization: residue field too large");
    std::vector<Poly<Fp>> out;
    std::vector<uint32_t> digits(static_cast<std::size_t>(d), 0);
    for (;;) {
        std::vector<Fp> coeffs(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) coeffs[static_cast<std::size_t>(i)] = Fp(digits[static_cast<std::size_t>(i)], p);
        out.push_back(Poly<Fp>(std::move(coeffs)));
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == p - 1) digits[pos++] = 0;
        if (pos == digits.size()) break;
        ++digits[pos];
    }
    return out;
}

// solve sum_k c_k beta^k = r over F_p by Gaussian elimination
inline std::vector<uint32_t> in_beta_basis(const Poly<Fp>& r, const Poly<Fp>& beta, int e,
                                           const Poly<Fp>& pi, uint32_t p) {
    int d = pi.degree();
    // columns: beta^0 .. beta^{e-1}; rows: x-basis coordinates
    std::vector<std::vector<uint32_t>> m(static_cast<std::size_t>(d),
                                         std::vector<uint32_t>(static_cast<std::size_t>(e) + 1, 0));
    Poly<Fp> pw = Poly<Fp>(Fp(1, p));
    for (int k = 0; k < e; ++k) {
        for (int i = 0; i < d; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                pw[static_cast<std::size_t>(i)].value();
        pw = fpmod_mul(pw, beta, pi);
    }
    for (int i = 0; i < d; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] =
            r[static_cast<std::size_t>(i)].value();

    auto modinv = [p](uint32_t a) { return Fp(a, p).inverse().value(); };
    int rank = 0;
    std::vector<int> pivot_col(static_cast<std::size_t>(e), -1);
    for (int col = 0; col < e && rank < d; ++col) {
        int sel = -1;
        for (int row = rank; row < d; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(rank)]);
        uint32_t inv = modinv(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int j = col; j <= e; ++j)
            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] = static_cast<uint32_t>(
                static_cast<uint64_t>(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) * inv % p);
        for (int row = 0; row < d; ++row) {
            if (row == rank) continue;
            uint64_t f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= e; ++j) {
                uint64_t sub = f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] % p;
                uint64_t cur = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    static_cast<uint32_t>((cur + p - sub) % p);
            }
        }
        pivot_col[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }
    std::vector<uint32_t> c(static_cast<std::size_t>(e), 0);
    for (int col = 0; col < e; ++col)
        if (pivot_col[static_cast<std::size_t>(col)] >= 0)
            c[static_cast<std::size_t>(col)] =
                m[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(col)])]
                 [static_cast<std::size_t>(e)];
    // consistency: rows below the rank must have zero rhs
    for (int row = rank; row < d; ++row)
        if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(e)] != 0)
            throw std::logic_error("in_beta_basis: residue not in the subfield");
    return c;
}

}  // namespace detail

// canonical key of the closed point cut out by residues in F_p[x]/(pi)
inline FpResidueKey fp_residue_key(uint32_t p, const Poly<Fp>& pi,
                                   const std::vector<Poly<Fp>>& residues) {
    int d = pi.degree();
    // smallest e with Frobenius^e fixing every residue; e divides d
    int e = 0;
    for (int cand = 1; cand <= d; ++cand) {
        if (d % cand != 0) continue;
        bool fixes = true;
        for (const auto& r : residues) {
            Poly<Fp> f = r;
            for (int k = 0; k < cand; ++k) f = fpmod_pow(f, p, pi);
            if (f != r % pi) {
                fixes = false;
                break;
            }
        }
        if (fixes) {
            e = cand;
            break;
        }
    }
    if (e == 0) throw std::logic_error("fp_residue_key: no fixing power");

    FpResidueKey key;
    key.p = p;
    key.ext_degree = static_cast<uint32_t>(e);

    if (e == 1) {
        for (const auto& r : residues) {
            if (r.degree() > 0) throw std::logic_error("fp_residue_key: prime-field residue expected");
            key.coords.push_back({r.is_zero() ? 0u : r[0].value()});
        }
        return key;
    }

    // root of the canonical irreducible C_e inside F_p[x]/(pi)
    const Poly<Fp>& ce = fp_canonical_irreducible(p, e);
    Poly<Fp> beta;
    bool found = false;
    for (const auto& z : detail::all_field_elements(p, pi)) {
        Poly<Fp> acc;  // evaluate ce at z mod pi by Horner
        for (int i = ce.degree(); i >= 0; --i) {
            acc = fpmod_mul(acc, z, pi) + Poly<Fp>(ce[static_cast<std::size_t>(i)]);
            acc = acc % pi;
        }
        if (acc.is_zero()) {
            beta = z;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("fp_residue_key: canonical polynomial has no root");

    // coordinates of each residue in the beta basis of F_{p^e}
    std::vector<std::vector<uint32_t>> base;
    for (const auto& r : residues)
        base.push_back(detail::in_beta_basis(r % pi, beta, e, pi, p));

    // minimize over the Frobenius orbit, computed in the canonical model
    const Poly<Fp>& cmod = ce;
    auto tuple_of = [&](const std::vector<std::vector<uint32_t>>& t, int frob) {
        std::vector<std::vector<uint32_t>> out;
        for (const auto& coords : t) {
            std::vector<Fp> cs(coords.size());
            for (std::size_t i = 0; i < coords.size(); ++i) cs[i] = Fp(coords[i], p);
            Poly<Fp> el{std::vector<Fp>(cs)};
            for (int k = 0; k < frob; ++k) el = fpmod_pow(el, p, cmod);
            std::vector<uint32_t> row(static_cast<std::size_t>(e), 0);
            for (int i = 0; i < e; ++i) row[static_cast<std::size_t>(i)] = el[static_cast<std::size_t>(i)].value();
            out.push_back(std::move(row));
        }
        return out;
    };
    key.coords = tuple_of(base, 0);
    for (int k = 1; k < e; ++k) key.coords = std::min(key.coords, tuple_of(base, k));
    return key;
}

}  // namespace zariski
