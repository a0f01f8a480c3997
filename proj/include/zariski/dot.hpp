#pragma once

// DOT renderings: Hasse diagrams of finite spaces under specialization,
// domination diagrams of model systems, and center-map fibers.

#include <sstream>
#include <string>
#include <vector>

#include "zariski/finite_space.hpp"
#include "zariski/models.hpp"

namespace zariski {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// Hasse diagram: an edge y -> x for each cover x < y, drawn from the
// generalization down to its specialization
inline std::string hasse_dot(const FiniteSpace& s, const std::vector<std::string>& names,
                             const std::string& graph_name = "space") {
    std::ostringstream os;
    os << "digraph " << dot_quote(graph_name) << " {\n";
    os << "  rankdir=BT;\n";
    for (int i = 0; i < s.size(); ++i)
        os << "  n" << i << " [label=" << dot_quote(names[static_cast<std::size_t>(i)]) << "];\n";
    for (int x = 0; x < s.size(); ++x) {
        for (int y = 0; y < s.size(); ++y) {
            if (x == y || !s.leq(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < s.size() && cover; ++z)
                if (z != x && z != y && s.leq(x, z) && s.leq(z, y)) cover = false;
            if (cover) os << "  n" << x << " -> n" << y << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

template <typename S>
std::string model_key_label(const S& s, const ModelPointKey<S>& k) {
    std::ostringstream os;
    os << "chart " << k.chart << ": (";
    if constexpr (std::is_same_v<S, FpRational>) {
        for (std::size_t i = 0; i < k.residues.coords.size(); ++i) {
            if (i) os << ",";
            const auto& coord = k.residues.coords[i];
            if (coord.size() == 1) {
                os << coord[0];
            } else {
                for (std::size_t j = 0; j < coord.size(); ++j) {
                    if (j) os << "+";
                    os << coord[j];
                    if (j > 0) os << "u" << (j > 1 ? "^" + std::to_string(j) : "");
                }
            }
        }
        os << ") in F_" << s.p << "^" << k.residues.ext_degree;
    } else {
        for (std::size_t i = 0; i < k.residues.size(); ++i) {
            if (i) os << ",";
            os << k.residues[i].to_string();
        }
        os << ")";
    }
    return os.str();
}

// domination diagram: an edge from each dominating model to what it
// dominates, computed at the probe bound
template <typename S>
std::string domination_dot(const ProjectiveSystem<S>& system,
                           const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "digraph \"domination\" {\n";
    for (std::size_t i = 0; i < system.models().size(); ++i)
        os << "  m" << i << " [label=" << dot_quote(names[i]) << "];\n";
    for (auto [i, j] : system.domination_pairs())
        os << "  m" << i << " -> m" << j << ";\n";
    os << "  label=\"probe " << system.probe() << "\";\n";
    os << "}\n";
    return os.str();
}

// center fibers: probed places grouped onto their model points
template <typename S>
std::string fibers_dot(const S& s, const ProjectiveModel<S>& model, std::size_t probe,
                       const std::string& graph_name = "fibers") {
    std::ostringstream os;
    os << "digraph " << dot_quote(graph_name) << " {\n";
    os << "  rankdir=LR;\n";
    std::vector<ModelPointKey<S>> keys;
    for (std::size_t i = 0; i < probe; ++i) {
        Place<S> v = nth_place(s, i);
        auto k = model.center(v);
        std::size_t ki = keys.size();
        for (std::size_t j = 0; j < keys.size(); ++j)
            if (keys[j] == k) ki = j;
        if (ki == keys.size()) {
            keys.push_back(k);
            os << "  k" << ki << " [shape=box,label=" << dot_quote(model_key_label(s, k))
               << "];\n";
        }
        os << "  p" << i << " [label=" << dot_quote(place_to_string(s, v)) << "];\n";
        os << "  p" << i << " -> k" << ki << ";\n";
    }
    os << "  label=\"probe " << probe << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace zariski
