#pragma once

// Irreducible one-dimensional spectral spaces: one generic point whose
// closure is everything, plus a finite or countably infinite discrete
// family of closed points. Subsets are represented exactly as
// finite/cofinite lists of closed-point keys plus a generic flag; the
// five topological operators are exact on this representation.
//
// Closed-point keys are opaque ordered tokens supplied by the
// instantiating module (primes, irreducible polynomials, model point
// ids); this module never inspects them beyond the supplied order and
// membership callbacks.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zariski/finite_space.hpp"

namespace zariski {

template <typename Key>
struct SubsetDesc {
    enum class Part { finite, cofinite };
    Part part = Part::finite;
    std::vector<Key> keys;  // sorted in space key order, duplicate-free
    bool has_generic = false;

    bool is_empty() const { return part == Part::finite && keys.empty() && !has_generic; }
};

template <typename Key>
class OneDimSpace {
public:
    using Subset = SubsetDesc<Key>;
    using Less = std::function<bool(const Key&, const Key&)>;
    using Enumerator = std::function<Key(std::size_t)>;
    using Member = std::function<bool(const Key&)>;

    static OneDimSpace finite_space(std::vector<Key> closed_points, Less less) {
        OneDimSpace s;
        s.less_ = std::move(less);
        std::sort(closed_points.begin(), closed_points.end(), s.less_);
        s.finite_points_ = std::move(closed_points);
        for (std::size_t i = 0; i + 1 < s.finite_points_->size(); ++i)
            if (!s.less_((*s.finite_points_)[i], (*s.finite_points_)[i + 1]))
                throw std::invalid_argument("OneDimSpace: duplicate closed points");
        return s;
    }

    static OneDimSpace infinite_space(Enumerator enumerator, Member member, Less less) {
        OneDimSpace s;
        s.less_ = std::move(less);
        s.enumerator_ = std::move(enumerator);
        s.member_ = std::move(member);
        return s;
    }

    bool is_finite() const { return finite_points_.has_value(); }
    std::size_t finite_count() const {
        if (!is_finite()) throw std::logic_error("OneDimSpace: infinite space has no count");
        return finite_points_->size();
    }

    Key closed_point(std::size_t i) const {
        if (is_finite()) {
            if (i >= finite_points_->size())
                throw std::out_of_range("OneDimSpace: closed point index");
            return (*finite_points_)[i];
        }
        return enumerator_(i);
    }

    bool is_member(const Key& k) const {
        if (is_finite()) {
            for (const auto& p : *finite_points_)
                if (keys_equal(p, k)) return true;
            return false;
        }
        return !member_ || member_(k);
    }

    bool key_less(const Key& a, const Key& b) const { return less_(a, b); }
    bool keys_equal(const Key& a, const Key& b) const { return !less_(a, b) && !less_(b, a); }

    // ---- subset constructors (validating + normalizing) ----

    Subset empty() const { return Subset{}; }
    Subset generic_only() const { return Subset{Subset::Part::finite, {}, true}; }
    Subset whole() const {
        if (is_finite()) return Subset{Subset::Part::finite, *finite_points_, true};
        return Subset{Subset::Part::cofinite, {}, true};
    }

    Subset make_finite(std::vector<Key> keys, bool generic) const {
        canonicalize(keys);
        return Subset{Subset::Part::finite, std::move(keys), generic};
    }

    Subset make_cofinite(std::vector<Key> excluded, bool generic) const {
        canonicalize(excluded);
        if (is_finite()) {  // normalize: cofinite illegal in a finite space
            std::vector<Key> keep;
            for (const auto& p : *finite_points_)
                if (!sorted_contains(excluded, p)) keep.push_back(p);
            return Subset{Subset::Part::finite, std::move(keep), generic};
        }
        return Subset{Subset::Part::cofinite, std::move(excluded), generic};
    }

    bool closed_part_infinite(const Subset& y) const {
        return !is_finite() && y.part == Subset::Part::cofinite;
    }
    bool closed_part_empty(const Subset& y) const {
        if (y.part == Subset::Part::cofinite) return false;  // always infinite here
        return y.keys.empty();
    }

    bool contains_key(const Subset& y, const Key& k) const {
        bool listed = sorted_contains(y.keys, k);
        return y.part == Subset::Part::finite ? listed : !listed;
    }

    bool equal(const Subset& a, const Subset& b) const {
        if (a.has_generic != b.has_generic || a.part != b.part) return false;
        if (a.keys.size() != b.keys.size()) return false;
        for (std::size_t i = 0; i < a.keys.size(); ++i)
            if (!keys_equal(a.keys[i], b.keys[i])) return false;
        return true;
    }

    bool is_whole(const Subset& y) const { return equal(y, whole()); }

    // ---- the five operators ----

    // Closed sets are the finite sets of closed points and the whole
    // space, so the closure of anything infinite or containing the
    // generic point is everything.
    Subset cl(const Subset& y) const {
        if (y.has_generic || closed_part_infinite(y)) return whole();
        return y;
    }

    // every nonempty open set contains the generic point
    Subset gen(const Subset& y) const {
        if (y.is_empty()) return empty();
        Subset r = y;
        r.has_generic = true;
        return r;
    }

    // This space is Noetherian: every subset is quasicompact, so the
    // inverse closure collapses to the closure under generalizations.
    // The truncation bridge to the finite-space oracle certifies this.
    Subset inv(const Subset& y) const { return gen(y); }

    // The generic point is the generic point of any infinite set of
    // closed points; finite sets of closed points are patch closed and
    // no other accumulation exists in this space shape.
    Subset patch(const Subset& y) const {
        if (closed_part_infinite(y)) {
            Subset r = y;
            r.has_generic = true;
            return r;
        }
        return y;
    }

    // closed points of inv(y): the closed part, unless y is empty or
    // exactly the generic point (which is closed in inv({generic}))
    Subset pt(const Subset& y) const {
        if (y.is_empty()) return empty();
        if (closed_part_empty(y)) return generic_only();  // y == {generic}
        Subset r = y;
        r.has_generic = false;
        return r;
    }

    // ---- boolean algebra ----

    Subset complement(const Subset& y) const {
        if (is_finite()) {
            std::vector<Key> rest;
            for (const auto& p : *finite_points_)
                if (!sorted_contains(y.keys, p)) rest.push_back(p);
            return Subset{Subset::Part::finite, std::move(rest), !y.has_generic};
        }
        return Subset{y.part == Subset::Part::finite ? Subset::Part::cofinite
                                                     : Subset::Part::finite,
                      y.keys, !y.has_generic};
    }

    Subset unite(const Subset& a, const Subset& b) const {
        Subset r;
        r.has_generic = a.has_generic || b.has_generic;
        const bool fa = a.part == Subset::Part::finite;
        const bool fb = b.part == Subset::Part::finite;
        if (fa && fb) {
            r.part = Subset::Part::finite;
            r.keys = merge_union(a.keys, b.keys);
        } else if (!fa && !fb) {
            r.part = Subset::Part::cofinite;
            r.keys = merge_intersection(a.keys, b.keys);
        } else {
            const Subset& fin = fa ? a : b;
            const Subset& cof = fa ? b : a;
            r.part = Subset::Part::cofinite;
            r.keys = merge_difference(cof.keys, fin.keys);
        }
        return r;
    }

    Subset intersect(const Subset& a, const Subset& b) const {
        Subset r;
        r.has_generic = a.has_generic && b.has_generic;
        const bool fa = a.part == Subset::Part::finite;
        const bool fb = b.part == Subset::Part::finite;
        if (fa && fb) {
            r.part = Subset::Part::finite;
            r.keys = merge_intersection(a.keys, b.keys);
        } else if (!fa && !fb) {
            r.part = Subset::Part::cofinite;
            r.keys = merge_union(a.keys, b.keys);
        } else {
            const Subset& fin = fa ? a : b;
            const Subset& cof = fa ? b : a;
            r.part = Subset::Part::finite;
            r.keys = merge_difference(fin.keys, cof.keys);
        }
        return r;
    }

    // ---- truncation bridge to the finite-space oracle ----

    struct Truncation {
        FiniteSpace space;       // points 0..n-1 closed, point n generic
        std::vector<Key> keys;   // key of closed point i
        int generic_index;
    };

    Truncation truncate(int n) const {
        if (n < 0) throw std::invalid_argument("OneDimSpace: negative truncation");
        if (is_finite()) n = std::min<int>(n, static_cast<int>(finite_points_->size()));
        std::vector<Key> keys;
        keys.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) keys.push_back(closed_point(static_cast<std::size_t>(i)));
        std::vector<std::pair<int, int>> leq;
        for (int i = 0; i < n; ++i) leq.emplace_back(i, n);  // closed <= generic
        return Truncation{FiniteSpace(n + 1, leq), std::move(keys), n};
    }

    PointSet push(const Truncation& t, const Subset& y) const {
        PointSet m = 0;
        for (std::size_t i = 0; i < t.keys.size(); ++i)
            if (contains_key(y, t.keys[i])) m |= FiniteSpace::bit(static_cast<int>(i));
        if (y.has_generic) m |= FiniteSpace::bit(t.generic_index);
        return m;
    }

private:
    Less less_;
    std::optional<std::vector<Key>> finite_points_;
    Enumerator enumerator_;
    Member member_;

    void canonicalize(std::vector<Key>& keys) const {
        for (const auto& k : keys)
            if (!is_member(k)) throw std::invalid_argument("OneDimSpace: key not in space");
        std::sort(keys.begin(), keys.end(), less_);
        keys.erase(std::unique(keys.begin(), keys.end(),
                               [&](const Key& a, const Key& b) { return keys_equal(a, b); }),
                   keys.end());
    }

    bool sorted_contains(const std::vector<Key>& v, const Key& k) const {
        auto it = std::lower_bound(v.begin(), v.end(), k, less_);
        return it != v.end() && keys_equal(*it, k);
    }

    std::vector<Key> merge_union(const std::vector<Key>& a, const std::vector<Key>& b) const {
        std::vector<Key> r;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), less_);
        return r;
    }
    std::vector<Key> merge_intersection(const std::vector<Key>& a,
                                        const std::vector<Key>& b) const {
        std::vector<Key> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r),
                              less_);
        return r;
    }
    std::vector<Key> merge_difference(const std::vector<Key>& a,
                                      const std::vector<Key>& b) const {
        std::vector<Key> r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), less_);
        return r;
    }
};

}  // namespace zariski
