#pragma once

// Projective models of k(x)/k given by generator tuples, the center map
// from the Zariski-Riemann space onto a model, domination, products,
// and the projective-limit formulas for inv/patch/pt over a system of
// models.
//
// A model is (f_0, ..., f_n) with charts k[f_0/f_i, ..., f_n/f_i]; a
// witness expression in g0..gn certifies that the ratios generate the
// whole function field by evaluating to x. The witness is checked with
// g_j bound to f_j*T in F(x)(T): a degree-zero result certifies the
// expression is an honest element of the function field of the model,
// and its value must be x.

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "zariski/residues.hpp"
#include "zariski/tpoly.hpp"

namespace zariski {

// ---- center keys -----------------------------------------------------------

template <typename S>
struct ModelResidueKey;
template <>
struct ModelResidueKey<FpRational> {
    using type = FpResidueKey;
};
template <>
struct ModelResidueKey<QRational> {
    using type = std::vector<Rational>;
};

// canonical key of a model point: smallest valid chart + residue normal form
template <typename S>
struct ModelPointKey {
    int chart = 0;
    typename ModelResidueKey<S>::type residues{};

    friend bool operator==(const ModelPointKey& a, const ModelPointKey& b) {
        return a.chart == b.chart && a.residues == b.residues;
    }
    friend bool operator<(const ModelPointKey& a, const ModelPointKey& b) {
        if (a.chart != b.chart) return a.chart < b.chart;
        return a.residues < b.residues;
    }
};

// ---- the model --------------------------------------------------------------

template <typename S>
class ProjectiveModel {
    static_assert(S::function_field, "projective models are built for the k(x)/k settings");

public:
    using Elem = typename S::Elem;
    using Key = ModelPointKey<S>;

    ProjectiveModel(S field, std::vector<Elem> gens, std::string witness)
        : s_(std::move(field)),
          gens_(std::move(gens)),
          witness_(std::move(witness)),
          cache_(std::make_shared<CenterCache>(s_)) {
        if (gens_.empty()) throw std::invalid_argument("ProjectiveModel: empty generator tuple");
        for (const auto& g : gens_)
            if (g.is_zero()) throw std::invalid_argument("ProjectiveModel: zero generator");
        verify_witness();
    }

    const S& field() const { return s_; }
    const std::vector<Elem>& gens() const { return gens_; }
    const std::string& witness() const { return witness_; }

    // the center of a place: tied chart indices resolve to the smallest
    Key center(const Place<S>& v) const {
        if (v.is_trivial())
            throw std::invalid_argument("ProjectiveModel: the trivial place centers on the generic point");
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->map.find(v);
            if (it != cache_->map.end()) return it->second;
        }
        Key key = compute_center(v);
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->map.emplace(v, key);
        return key;
    }

    bool same_center(const Place<S>& v, const Place<S>& w) const { return center(v) == center(w); }

private:
    Key compute_center(const Place<S>& v) const {
        std::vector<ExtInt> vals;
        vals.reserve(gens_.size());
        for (const auto& g : gens_) vals.push_back(place_value(s_, v, g));
        std::size_t chart = 0;
        for (std::size_t j = 1; j < gens_.size(); ++j)
            if (vals[j] < vals[chart]) chart = j;
        Key key;
        key.chart = static_cast<int>(chart);
        if constexpr (std::is_same_v<S, FpRational>) {
            if (v.is_infinity()) {
                FpResidueKey rk;
                rk.p = s_.p;
                rk.ext_degree = 1;
                for (const auto& g : gens_) {
                    Fp r = residue_at_infinity(s_, g / gens_[chart]);
                    rk.coords.push_back({r.is_zero() ? 0u : r.value()});
                }
                key.residues = std::move(rk);
            } else {
                std::vector<Poly<Fp>> residues;
                for (const auto& g : gens_)
                    residues.push_back(residue_at_poly_place(v.key, g / gens_[chart]));
                key.residues = fp_residue_key(s_.p, v.key, residues);
            }
        } else {
            std::vector<Rational> tuple;
            for (const auto& g : gens_) {
                if (v.is_infinity()) {
                    tuple.push_back(residue_at_infinity(s_, g / gens_[chart]));
                } else {
                    Poly<Rational> r = residue_at_poly_place(v.key, g / gens_[chart]);
                    if (r.degree() > 0)
                        throw UnsupportedResidueError(
                            "center: residues outside Q are not supported over this base");
                    tuple.push_back(r.is_zero() ? Rational(0) : r[0]);
                }
            }
            key.residues = std::move(tuple);
        }
        return key;
    }

    S s_;
    std::vector<Elem> gens_;
    std::string witness_;

    struct PlaceLess {
        S s;
        bool operator()(const Place<S>& a, const Place<S>& b) const {
            return place_less(s, a, b);
        }
    };
    struct CenterCache {
        std::mutex mutex;
        std::map<Place<S>, Key, PlaceLess> map;
        explicit CenterCache(const S& s) : map(PlaceLess{s}) {}
    };
    std::shared_ptr<CenterCache> cache_ = nullptr;

    void verify_witness() const {
        using TR = TRational<S>;
        ExprParser<TR> parser(
            witness_,
            [this](const BigInt& n) {
                if constexpr (std::is_same_v<S, FpRational>) {
                    return TR(TPoly<S>(Poly<Elem>(
                        s_.constant((n % BigInt(static_cast<long long>(s_.p))).to_int64()))));
                } else {
                    return TR(TPoly<S>(Poly<Elem>(Elem(Poly<Rational>(Rational(n))))));
                }
            },
            [this](const std::string& name) -> TR {
                if (name.size() < 2 || name[0] != 'g')
                    throw ParseError("witness variables are g0..gn");
                std::size_t idx = std::stoul(name.substr(1));
                if (idx >= gens_.size()) throw ParseError("witness index out of range");
                return TR(TPoly<S>::monomial(gens_[idx], 1));  // g_j -> f_j * T
            });
        TR value = parser.parse();
        TR x_const(TPoly<S>(Poly<Elem>(s_.x())));
        if (!(value == x_const))
            throw std::invalid_argument(
                "ProjectiveModel: witness does not generate x from the tuple");
    }
};

template <typename S>
ProjectiveModel<S> scale_model(const ProjectiveModel<S>& m, const typename S::Elem& c) {
    if (c.is_zero()) throw std::invalid_argument("scale_model: zero scalar");
    std::vector<typename S::Elem> gens;
    for (const auto& g : m.gens()) gens.push_back(g * c);
    return ProjectiveModel<S>(m.field(), std::move(gens), m.witness());
}

// rewrite witness variable indices through a map (used by products)
inline std::string remap_witness(const std::string& witness,
                                 const std::map<std::size_t, std::size_t>& index_map) {
    std::string out;
    for (std::size_t i = 0; i < witness.size();) {
        if (witness[i] == 'g' && i + 1 < witness.size() &&
            std::isdigit(static_cast<unsigned char>(witness[i + 1]))) {
            std::size_t j = i + 1;
            while (j < witness.size() && std::isdigit(static_cast<unsigned char>(witness[j]))) ++j;
            std::size_t idx = std::stoul(witness.substr(i + 1, j - i - 1));
            auto it = index_map.find(idx);
            if (it == index_map.end()) throw std::invalid_argument("remap_witness: missing index");
            out += "g" + std::to_string(it->second);
            i = j;
        } else {
            out += witness[i++];
        }
    }
    return out;
}

// the model on all pairwise products f_i * g_j; dominates both factors
template <typename S>
ProjectiveModel<S> product_model(const ProjectiveModel<S>& a, const ProjectiveModel<S>& b) {
    std::vector<typename S::Elem> gens;
    const std::size_t m = b.gens().size();
    for (const auto& fa : a.gens())
        for (const auto& fb : b.gens()) gens.push_back(fa * fb);
    std::map<std::size_t, std::size_t> remap;  // a's index i -> product index of f_i*g_0
    for (std::size_t i = 0; i < a.gens().size(); ++i) remap[i] = i * m;
    return ProjectiveModel<S>(a.field(), std::move(gens), remap_witness(a.witness(), remap));
}

// ---- the model space ---------------------------------------------------------

// closed points are center classes of places, enumerated in place order
// with duplicates skipped; the generic point is the class of the trivial
// place
template <typename S>
OneDimSpace<ModelPointKey<S>> model_space(const ProjectiveModel<S>& model,
                                          std::size_t member_probe = 64) {
    using Key = ModelPointKey<S>;
    auto shared = std::make_shared<ProjectiveModel<S>>(model);
    auto cache = std::make_shared<std::vector<Key>>();
    auto seen = std::make_shared<std::set<Key>>();
    auto next_place = std::make_shared<std::size_t>(0);
    const S s = model.field();
    auto enumerator = [shared, cache, seen, next_place, s](std::size_t i) {
        while (cache->size() <= i) {
            if (*next_place > 100000)
                throw InconclusiveError("model_space: enumeration bound exceeded");
            Place<S> v = nth_place(s, (*next_place)++);
            Key k = shared->center(v);
            if (seen->insert(k).second) cache->push_back(k);
        }
        return (*cache)[i];
    };
    auto member = [shared, s, member_probe, enumerator](const Key& k) {
        for (std::size_t i = 0; i < member_probe; ++i)
            if (enumerator(i) == k) return true;
        return false;
    };
    return OneDimSpace<Key>::infinite_space(enumerator, member,
                                            [](const Key& a, const Key& b) { return a < b; });
}

// ---- domination ----------------------------------------------------------------

struct DominationResult {
    bool holds = false;
    bool probe_limited = true;
    std::size_t probe = 0;
    std::string failure;  // empty when holds
};

// y dominates x when, on probed places, the center classes of y refine
// those of x and the chart algebra of x at each center is contained in
// every valuation ring of the class. The test is valuative, so it
// cannot see ring-level defects invisible to valuations: a model whose
// center map is a bijection (the cuspidal curve) passes against the
// line even though the local ring at the cusp is smaller.
template <typename S>
DominationResult dominates(const ProjectiveModel<S>& y, const ProjectiveModel<S>& x,
                           std::size_t probe = 64) {
    DominationResult res;
    res.probe = probe;
    const S& s = y.field();
    std::vector<Place<S>> places;
    std::vector<ModelPointKey<S>> ky, kx;
    for (std::size_t i = 0; i < probe; ++i) {
        places.push_back(nth_place(s, i));
        ky.push_back(y.center(places.back()));
        kx.push_back(x.center(places.back()));
    }
    for (std::size_t i = 0; i < probe; ++i)
        for (std::size_t j = i + 1; j < probe; ++j)
            if (ky[i] == ky[j] && !(kx[i] == kx[j])) {
                res.failure = "center classes do not refine: places " +
                              place_to_string(s, places[i]) + ", " + place_to_string(s, places[j]);
                return res;
            }
    // chart algebra containment, verified by values on the class
    for (std::size_t i = 0; i < probe; ++i) {
        std::size_t chart = static_cast<std::size_t>(kx[i].chart);
        for (const auto& g : x.gens()) {
            auto ratio = g / x.gens()[chart];
            for (std::size_t j = 0; j < probe; ++j) {
                if (!(ky[i] == ky[j])) continue;
                if (place_value(s, places[j], ratio) < ExtInt(0)) {
                    res.failure = "chart generators leave the class at " +
                                  place_to_string(s, places[j]);
                    return res;
                }
            }
        }
    }
    res.holds = true;
    return res;
}

// ---- dominant systems and the limit formulas ------------------------------------

template <typename S>
class ProjectiveSystem {
public:
    ProjectiveSystem(std::vector<ProjectiveModel<S>> models, std::size_t probe = 64)
        : models_(std::move(models)), probe_(probe) {
        if (models_.empty()) throw std::invalid_argument("ProjectiveSystem: no models");
        for (std::size_t i = 0; i < models_.size(); ++i)
            for (std::size_t j = 0; j < models_.size(); ++j) {
                if (i == j) continue;
                auto d = dominates(models_[i], models_[j], probe_);
                if (d.holds) domination_.emplace_back(i, j);
            }
    }

    const std::vector<ProjectiveModel<S>>& models() const { return models_; }
    std::size_t probe() const { return probe_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& domination_pairs() const {
        return domination_;
    }

private:
    std::vector<ProjectiveModel<S>> models_;
    std::size_t probe_;
    std::vector<std::pair<std::size_t, std::size_t>> domination_;  // (dominating, dominated)
};

template <typename S>
struct LimitOpsResult {
    SubsetDesc<Place<S>> inv, patch, pt;
    bool probe_limited = true;
    std::size_t probe = 0;
};

// Theorem-style limit formulas over a system of Noetherian models: a
// place qualifies when for every model its center satisfies the
// condition against the image of Z in that model. In one-dimensional
// model spaces the three conditions collapse to one condition on closed
// candidates plus separate rules for the generic point.
template <typename S>
LimitOpsResult<S> limit_ops(const ProjectiveSystem<S>& system,
                            const OneDimSpace<Place<S>>& space,
                            const SubsetDesc<Place<S>>& z) {
    using Sub = SubsetDesc<Place<S>>;
    const S& s = system.models().front().field();
    const std::size_t probe = system.probe();
    LimitOpsResult<S> out;
    out.probe = probe;

    const bool z_empty = z.is_empty();
    const bool z_cofinite = z.part == Sub::Part::cofinite;
    const bool z_infinite = z_cofinite;  // cofinite in an infinite space
    const bool z_closed_nonempty = z_cofinite || !z.keys.empty();

    // probed places, as the candidate pool for membership searches
    std::vector<Place<S>> pool;
    for (std::size_t i = 0; i < probe; ++i) pool.push_back(nth_place(s, i));
    for (const auto& k : z.keys)
        if (std::none_of(pool.begin(), pool.end(),
                         [&](const Place<S>& p) { return place_equal(s, p, k); }))
            pool.push_back(k);

    const std::size_t n_models = system.models().size();
    std::vector<char> in_z(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        in_z[i] = space.contains_key(z, pool[i]) ? 1 : 0;
    std::vector<std::vector<ModelPointKey<S>>> keys(n_models);
    for (std::size_t m = 0; m < n_models; ++m) {
        keys[m].reserve(pool.size());
        for (const auto& v : pool) keys[m].push_back(system.models()[m].center(v));
    }

    // closed candidate v qualifies iff for every model X the center of v
    // lies in X(Z), witnessed by a member of Z with the same center
    auto qualifies = [&](std::size_t vi) {
        if (in_z[vi]) return true;
        for (std::size_t m = 0; m < n_models; ++m) {
            bool witnessed = false;
            for (std::size_t wi = 0; wi < pool.size(); ++wi) {
                if (!in_z[wi]) continue;
                if (keys[m][wi] == keys[m][vi]) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
        return true;
    };

    Sub closed_part;
    if (!z_cofinite) {
        std::vector<Place<S>> members;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (qualifies(i)) members.push_back(pool[i]);
        closed_part = space.make_finite(std::move(members), false);
    } else {
        std::vector<Place<S>> still_out;
        for (const auto& e : z.keys) {
            std::size_t vi = pool.size();
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (place_equal(s, pool[i], e)) {
                    vi = i;
                    break;
                }
            if (!qualifies(vi)) still_out.push_back(e);
        }
        closed_part = space.make_cofinite(std::move(still_out), false);
    }

    // generic-point rules: the generic qualifies for inv when every image
    // is nonempty, for patch when it is in the image or the image is
    // infinite, for pt when the image is exactly the generic point
    bool generic_inv = !z_empty;
    bool generic_patch = z.has_generic || z_infinite;
    bool generic_pt = z.has_generic && !z_closed_nonempty;

    out.inv = closed_part;
    out.inv.has_generic = generic_inv;
    out.patch = closed_part;
    out.patch.has_generic = generic_patch;
    out.pt = closed_part;
    out.pt.has_generic = generic_pt;
    return out;
}

// ---- the Q/Z collapse fixture ----------------------------------------------------

// Projective models of Q/Z all have the prime spectrum of the integers
// as underlying space: the center class of a prime p under any nonzero
// generator tuple is p itself. This computes the center data directly.
struct QZCenterKey {
    int chart = 0;
    BigInt characteristic;          // the prime
    std::vector<BigInt> residues;   // chart-generator residues mod p

    friend bool operator==(const QZCenterKey&, const QZCenterKey&) = default;
    friend bool operator<(const QZCenterKey& a, const QZCenterKey& b) {
        if (a.chart != b.chart) return a.chart < b.chart;
        if (a.characteristic != b.characteristic) return a.characteristic < b.characteristic;
        return a.residues < b.residues;
    }
};

inline QZCenterKey qoverz_center(const std::vector<Rational>& gens, const BigInt& p) {
    if (gens.empty()) throw std::invalid_argument("qoverz_center: empty tuple");
    QOverZ s{};
    auto vp = Place<QOverZ>::finite(p);
    std::size_t chart = 0;
    ExtInt best = place_value(s, vp, gens[0]);
    for (std::size_t j = 1; j < gens.size(); ++j) {
        ExtInt v = place_value(s, vp, gens[j]);
        if (v < best) {
            best = v;
            chart = j;
        }
    }
    QZCenterKey key;
    key.chart = static_cast<int>(chart);
    key.characteristic = p;
    for (const auto& g : gens) {
        Rational ratio = g / gens[chart];
        // ratio has nonnegative value at p: reduce num/den mod p
        BigInt num = ratio.num() % p, den = ratio.den() % p;
        if (num.is_negative()) num += p;
        if (den.is_negative()) den += p;
        BigInt x, y;
        BigInt g2 = BigInt::egcd(den, p, x, y);
        if (!g2.is_one()) throw std::logic_error("qoverz_center: denominator not a unit");
        BigInt r = num * x % p;
        if (r.is_negative()) r += p;
        key.residues.push_back(r);
    }
    return key;
}

}  // namespace zariski
