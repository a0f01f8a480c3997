#pragma once

// Finite spectral spaces presented as posets under specialization.
// Convention, used everywhere in this library: x <= y means x lies in
// the closure of {y}; open sets are the up-closed sets. Every finite
// poset is a spectral space and every subset of it is quasicompact.
//
// This module is the ground-truth oracle: cl, gen, inv, patch and pt
// are computed from their definitions (set intersections over the
// enumerated lattice of opens), not from order-theoretic shortcuts.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski {

using PointSet = uint32_t;  // bitmask subset of a FiniteSpace

class FiniteSpace {
public:
    static constexpr int kMaxPoints = 16;

    // leq_pairs lists generators of the specialization order (x <= y);
    // the reflexive-transitive closure is taken, antisymmetry enforced.
    explicit FiniteSpace(int n, const std::vector<std::pair<int, int>>& leq_pairs = {}) : n_(n) {
        if (n < 0 || n > kMaxPoints)
            throw std::invalid_argument("FiniteSpace: point count out of range");
        leq_.assign(static_cast<std::size_t>(n) * n, false);
        for (int i = 0; i < n; ++i) at(i, i) = true;
        for (auto [x, y] : leq_pairs) {
            if (x < 0 || x >= n || y < 0 || y >= n)
                throw std::invalid_argument("FiniteSpace: leq pair out of range");
            at(x, y) = true;
        }
        // transitive closure
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (at(i, k))
                    for (int j = 0; j < n; ++j)
                        if (at(k, j)) at(i, j) = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && at(i, j) && at(j, i))
                    throw std::invalid_argument("FiniteSpace: relation is not antisymmetric");
        build_masks();
    }

    // space from a full relation matrix (must already be a partial order)
    static FiniteSpace from_relation(int n, const std::vector<bool>& leq) {
        FiniteSpace s(n);
        if (leq.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("FiniteSpace: bad relation size");
        s.leq_ = leq;
        for (int i = 0; i < n; ++i) {
            if (!s.at(i, i)) throw std::invalid_argument("FiniteSpace: relation not reflexive");
            for (int j = 0; j < n; ++j) {
                if (i != j && s.at(i, j) && s.at(j, i))
                    throw std::invalid_argument("FiniteSpace: relation not antisymmetric");
                if (s.at(i, j))
                    for (int k = 0; k < n; ++k)
                        if (s.at(j, k) && !s.at(i, k))
                            throw std::invalid_argument("FiniteSpace: relation not transitive");
            }
        }
        s.build_masks();
        return s;
    }

    int size() const { return n_; }
    PointSet all() const { return n_ == 32 ? ~0u : (1u << n_) - 1; }
    bool leq(int x, int y) const { return at(x, y); }

    PointSet up_of(int x) const { return up_[static_cast<std::size_t>(x)]; }
    PointSet down_of(int x) const { return down_[static_cast<std::size_t>(x)]; }

    PointSet up_closure(PointSet y) const {
        PointSet r = 0;
        for (int i = 0; i < n_; ++i)
            if (y & bit(i)) r |= up_[static_cast<std::size_t>(i)];
        return r;
    }
    PointSet down_closure(PointSet y) const {
        PointSet r = 0;
        for (int i = 0; i < n_; ++i)
            if (y & bit(i)) r |= down_[static_cast<std::size_t>(i)];
        return r;
    }

    bool is_open(PointSet u) const { return up_closure(u) == u; }
    bool is_closed(PointSet c) const { return down_closure(c) == c; }

    // In a finite space every subset is quasicompact: any open cover is
    // itself finite and serves as its own finite subcover.
    bool is_quasicompact(PointSet) const { return true; }

    // all open sets, i.e. all up-closed subsets (includes the empty set)
    const std::vector<PointSet>& opens() const { return opens_; }
    // all quasicompact opens; the filter is stated explicitly because
    // the operators below are defined through it
    const std::vector<PointSet>& qc_opens() const { return opens_; }
    const std::vector<PointSet>& closeds() const { return closeds_; }

    static PointSet bit(int i) { return 1u << i; }

    bool validate_subset(PointSet y) const { return (y & ~all()) == 0; }

private:
    int n_ = 0;
    std::vector<bool> leq_;
    std::vector<PointSet> up_, down_;
    std::vector<PointSet> opens_, closeds_;

    bool at(int x, int y) const { return leq_[static_cast<std::size_t>(x) * n_ + y]; }
    std::vector<bool>::reference at(int x, int y) {
        return leq_[static_cast<std::size_t>(x) * n_ + y];
    }

    void build_masks() {
        up_.assign(static_cast<std::size_t>(n_), 0);
        down_.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j)) {
                    up_[static_cast<std::size_t>(i)] |= bit(j);
                    down_[static_cast<std::size_t>(j)] |= bit(i);
                }
        opens_.clear();
        closeds_.clear();
        if (n_ > 20) throw std::invalid_argument("FiniteSpace: too large to enumerate opens");
        for (PointSet u = 0; u <= all(); ++u) {
            if (is_open(u)) opens_.push_back(u);
            if (is_closed(u)) closeds_.push_back(u);
            if (u == all()) break;
        }
    }
};

// --- the five operators, from their definitions -------------------------

// intersection of all closed sets containing y
inline PointSet cl(const FiniteSpace& s, PointSet y) {
    PointSet r = s.all();
    for (PointSet c : s.closeds())
        if ((y & ~c) == 0) r &= c;
    return r;
}

// intersection of all open sets containing y
inline PointSet gen(const FiniteSpace& s, PointSet y) {
    PointSet r = s.all();
    for (PointSet u : s.opens())
        if ((y & ~u) == 0) r &= u;
    return r;
}

// intersection of all quasicompact open sets containing y
inline PointSet inv(const FiniteSpace& s, PointSet y) {
    PointSet r = s.all();
    for (PointSet u : s.qc_opens())
        if ((y & ~u) == 0) r &= u;
    return r;
}

// intersection of all sets of the form U1 | ~U2 (U1, U2 qc open) containing y
inline PointSet patch(const FiniteSpace& s, PointSet y) {
    if (s.qc_opens().size() > 4096)
        throw std::length_error("patch: too many quasicompact opens, reduce the space");
    PointSet r = s.all();
    for (PointSet u1 : s.qc_opens()) {
        for (PointSet u2 : s.qc_opens()) {
            PointSet between = u1 | (s.all() & ~u2);
            if ((y & ~between) == 0) r &= between;
        }
    }
    return r;
}

// points of inv(y) closed in the subspace topology of inv(y)
inline PointSet pt(const FiniteSpace& s, PointSet y) {
    PointSet iv = inv(s, y);
    PointSet r = 0;
    for (int i = 0; i < s.size(); ++i) {
        if (!(iv & FiniteSpace::bit(i))) continue;
        if ((s.down_of(i) & iv) == FiniteSpace::bit(i)) r |= FiniteSpace::bit(i);
    }
    return r;
}

// nonempty, and any two nonempty relatively open subsets of y intersect
inline bool is_irreducible(const FiniteSpace& s, PointSet y) {
    if (y == 0) return false;
    if (s.opens().size() > 4096)
        throw std::length_error("is_irreducible: too many opens, reduce the space");
    for (PointSet u1 : s.opens()) {
        PointSet a = u1 & y;
        if (a == 0) continue;
        for (PointSet u2 : s.opens()) {
            PointSet b = u2 & y;
            if (b == 0) continue;
            if ((a & b) == 0) return false;
        }
    }
    return true;
}

// --- spectral maps -------------------------------------------------------

// A monotone total map between finite spaces; between finite spectral
// spaces monotonicity is exactly continuity, and such maps are spectral.
class SpectralMapFin {
public:
    SpectralMapFin(const FiniteSpace& source, const FiniteSpace& target,
                   std::vector<int> graph)
        : src_(&source), tgt_(&target), graph_(std::move(graph)) {
        if (static_cast<int>(graph_.size()) != source.size())
            throw std::invalid_argument("SpectralMapFin: graph is not total");
        for (int v : graph_)
            if (v < 0 || v >= target.size())
                throw std::invalid_argument("SpectralMapFin: value out of range");
        for (int x = 0; x < source.size(); ++x)
            for (int y = 0; y < source.size(); ++y)
                if (source.leq(x, y) && !target.leq(graph_[static_cast<std::size_t>(x)],
                                                    graph_[static_cast<std::size_t>(y)]))
                    throw std::invalid_argument("SpectralMapFin: not order-preserving");
    }

    const FiniteSpace& source() const { return *src_; }
    const FiniteSpace& target() const { return *tgt_; }
    int apply(int x) const { return graph_[static_cast<std::size_t>(x)]; }

    PointSet image(PointSet z) const {
        PointSet r = 0;
        for (int i = 0; i < src_->size(); ++i)
            if (z & FiniteSpace::bit(i)) r |= FiniteSpace::bit(apply(i));
        return r;
    }

    // closed map: the image of every down-closed set is down-closed
    bool is_closed_map() const {
        for (PointSet c : src_->closeds())
            if (!tgt_->is_closed(image(c))) return false;
        return true;
    }

private:
    const FiniteSpace* src_;
    const FiniteSpace* tgt_;
    std::vector<int> graph_;
};

// The eight image sets a spectral map produces from a subset, and which
// of the containments and equalities between them hold.
struct ImageOpsReport {
    PointSet d_gen, gen_d;
    PointSet d_inv, inv_d;
    PointSet d_patch, patch_d;
    PointSet d_pt, pt_d;
    bool gen_contained;    // d(gen Z) subset of gen(d Z)
    bool inv_contained;    // d(inv Z) subset of inv(d Z)
    bool patch_equal;      // d(patch Z) == patch(d Z)
    bool pt_equal;         // d(pt Z) == pt(d Z)
    bool map_is_closed;
};

inline ImageOpsReport image_ops(const SpectralMapFin& f, PointSet z) {
    const FiniteSpace& src = f.source();
    const FiniteSpace& tgt = f.target();
    ImageOpsReport r{};
    PointSet dz = f.image(z);
    r.d_gen = f.image(gen(src, z));
    r.gen_d = gen(tgt, dz);
    r.d_inv = f.image(inv(src, z));
    r.inv_d = inv(tgt, dz);
    r.d_patch = f.image(patch(src, z));
    r.patch_d = patch(tgt, dz);
    r.d_pt = f.image(pt(src, z));
    r.pt_d = pt(tgt, dz);
    r.gen_contained = (r.d_gen & ~r.gen_d) == 0;
    r.inv_contained = (r.d_inv & ~r.inv_d) == 0;
    r.patch_equal = r.d_patch == r.patch_d;
    r.pt_equal = r.d_pt == r.pt_d;
    r.map_is_closed = f.is_closed_map();
    return r;
}

}  // namespace zariski
