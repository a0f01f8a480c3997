#pragma once

// Exhaustive enumeration of small posets and monotone maps, used by the
// property suites. Posets are enumerated as labeled partial orders by
// orienting each unordered pair three ways and filtering for
// transitivity; the labeled counts (1, 3, 19, 219, 4231 for n = 1..5)
// are asserted in the tests.

#include <functional>
#include <vector>

#include "zariski/finite_space.hpp"

namespace zariski {

inline void for_each_poset(int n, const std::function<void(const FiniteSpace&)>& fn) {
    if (n == 0) {
        fn(FiniteSpace(0));
        return;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<int> choice(pairs.size(), 0);  // 0: incomparable, 1: i<j, 2: j<i
    std::vector<bool> rel(static_cast<std::size_t>(n) * n, false);
    auto at = [&](int a, int b) -> std::vector<bool>::reference {
        return rel[static_cast<std::size_t>(a) * n + b];
    };

    while (true) {
        std::fill(rel.begin(), rel.end(), false);
        for (int i = 0; i < n; ++i) at(i, i) = true;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (choice[k] == 1) at(pairs[k].first, pairs[k].second) = true;
            if (choice[k] == 2) at(pairs[k].second, pairs[k].first) = true;
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j) {
                if (!at(i, j)) continue;
                for (int k = 0; k < n; ++k)
                    if (at(j, k) && !at(i, k)) {
                        transitive = false;
                        break;
                    }
            }
        if (transitive) fn(FiniteSpace::from_relation(n, rel));

        std::size_t pos = 0;
        while (pos < choice.size() && choice[pos] == 2) choice[pos++] = 0;
        if (pos == choice.size()) break;
        ++choice[pos];
    }
}

inline std::vector<FiniteSpace> all_posets(int n) {
    std::vector<FiniteSpace> out;
    for_each_poset(n, [&](const FiniteSpace& s) { out.push_back(s); });
    return out;
}

// all monotone total maps source -> target, presented as value vectors
inline void for_each_monotone_map(const FiniteSpace& source, const FiniteSpace& target,
                                  const std::function<void(const std::vector<int>&)>& fn) {
    const int a = source.size(), b = target.size();
    if (a == 0) {
        fn({});
        return;
    }
    if (b == 0) return;  // no maps into the empty space
    std::vector<int> g(static_cast<std::size_t>(a), 0);
    while (true) {
        bool monotone = true;
        for (int x = 0; x < a && monotone; ++x)
            for (int y = 0; y < a; ++y)
                if (source.leq(x, y) &&
                    !target.leq(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(y)])) {
                    monotone = false;
                    break;
                }
        if (monotone) fn(g);
        int pos = 0;
        while (pos < a && g[static_cast<std::size_t>(pos)] == b - 1)
            g[static_cast<std::size_t>(pos++)] = 0;
        if (pos == a) break;
        ++g[static_cast<std::size_t>(pos)];
    }
}

}  // namespace zariski
