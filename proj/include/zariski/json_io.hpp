#pragma once

// JSON serializations: places, subsets, model point keys, and the
// workspace file. Output is canonical (ordered keys, sorted collections)
// so identical inputs produce identical report bytes.

#include <json.hpp>

#include <string>
#include <vector>

#include "zariski/grammar.hpp"
#include "zariski/models.hpp"
#include "zariski/onedim.hpp"
#include "zariski/places.hpp"

namespace zariski {

using Json = nlohmann::ordered_json;

// ---- places ---------------------------------------------------------------

template <typename S>
Json place_json(const S& s, const Place<S>& p) {
    Json j;
    switch (p.kind) {
        case Place<S>::Kind::trivial: j["kind"] = "trivial"; break;
        case Place<S>::Kind::infinity: j["kind"] = "infinity"; break;
        default:
            j["kind"] = S::function_field ? "poly" : "prime";
            j["value"] = place_to_string(s, p);
    }
    return j;
}

template <typename S>
Place<S> place_from_json(const S& s, const Json& j) {
    if (j.is_string()) return parse_place(s, j.get<std::string>());
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("place: expected a string or an object with a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "trivial") return Place<S>::trivial();
    if (kind == "infinity") {
        if constexpr (S::has_infinity_place) return Place<S>::infinity();
        throw ParseError("place: this field has no infinite place");
    }
    if (kind != "prime" && kind != "poly") throw ParseError("place: unknown kind " + kind);
    if (!j.contains("value")) throw ParseError("place: missing value");
    return parse_place(s, j["value"].get<std::string>());
}

// ---- subsets of the Zariski-Riemann space ----------------------------------

template <typename S>
Json subset_json(const S& s, const SubsetDesc<Place<S>>& sub) {
    using Sub = SubsetDesc<Place<S>>;
    Json closed;
    Json keys = Json::array();
    for (const auto& k : sub.keys) keys.push_back(place_json(s, k));
    closed[sub.part == Sub::Part::finite ? "finite" : "cofinite"] = keys;
    Json j;
    j["closed"] = closed;
    j["generic"] = sub.has_generic;
    return j;
}

template <typename S>
SubsetDesc<Place<S>> subset_from_json(const S& s, const OneDimSpace<Place<S>>& space,
                                      const Json& j) {
    if (!j.is_object() || !j.contains("closed"))
        throw ParseError("subset: expected an object with closed part");
    const Json& closed = j["closed"];
    bool generic = j.value("generic", false);
    bool finite = closed.contains("finite");
    bool cofinite = closed.contains("cofinite");
    if (finite == cofinite) throw ParseError("subset: closed part must be finite or cofinite");
    std::vector<Place<S>> keys;
    for (const auto& e : closed[finite ? "finite" : "cofinite"])
        keys.push_back(place_from_json(s, e));
    for (const auto& k : keys)
        if (k.is_trivial()) throw ParseError("subset: the generic point is a flag, not a key");
    return finite ? space.make_finite(std::move(keys), generic)
                  : space.make_cofinite(std::move(keys), generic);
}

// ---- model point keys --------------------------------------------------------

inline Json residue_key_json(const FpResidueKey& k) {
    Json j;
    j["p"] = k.p;
    j["degree"] = k.ext_degree;
    j["coords"] = k.coords;
    return j;
}

template <typename S>
Json model_key_json(const S&, const ModelPointKey<S>& k) {
    Json j;
    j["chart"] = k.chart;
    if constexpr (std::is_same_v<S, FpRational>) {
        j["residues"] = residue_key_json(k.residues);
    } else {
        Json arr = Json::array();
        for (const auto& r : k.residues) arr.push_back(r.to_string());
        j["residues"] = arr;
    }
    return j;
}

// ---- finite spaces -------------------------------------------------------------

struct NamedFiniteSpace {
    FiniteSpace space;
    std::vector<std::string> names;

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw ParseError("unknown point name: " + name);
    }
};

inline NamedFiniteSpace finite_space_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points"))
        throw ParseError("space: expected an object with points");
    std::vector<std::string> names;
    for (const auto& p : j["points"]) names.push_back(p.get<std::string>());
    std::vector<std::pair<int, int>> leq;
    NamedFiniteSpace out{FiniteSpace(0), names};
    if (j.contains("leq")) {
        for (const auto& pair : j["leq"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("space: leq entries are pairs");
            leq.emplace_back(out.index_of(pair[0].get<std::string>()),
                             out.index_of(pair[1].get<std::string>()));
        }
    }
    out.space = FiniteSpace(static_cast<int>(names.size()), leq);
    return out;
}

inline PointSet members_from_json(const NamedFiniteSpace& s, const Json& j) {
    if (!j.is_object() || !j.contains("members"))
        throw ParseError("subset: expected an object with members");
    PointSet m = 0;
    for (const auto& p : j["members"])
        m |= FiniteSpace::bit(s.index_of(p.get<std::string>()));
    return m;
}

inline Json members_json(const NamedFiniteSpace& s, PointSet m) {
    Json arr = Json::array();
    for (int i = 0; i < s.space.size(); ++i)
        if (m & FiniteSpace::bit(i)) arr.push_back(s.names[static_cast<std::size_t>(i)]);
    Json j;
    j["members"] = arr;
    return j;
}

// ---- field specs ------------------------------------------------------------------

inline FieldSpec field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field: expected a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "qz") return QOverZ{};
    if (kind == "qx") return QRational{};
    if (kind == "fp") {
        if (!j.contains("p")) throw ParseError("field: fp needs p");
        return FpRational{j["p"].get<uint32_t>()};
    }
    throw ParseError("field: unknown kind " + kind);
}

inline Json field_json(const FieldSpec& f) {
    Json j;
    if (std::holds_alternative<QOverZ>(f)) {
        j["kind"] = "qz";
    } else if (std::holds_alternative<QRational>(f)) {
        j["kind"] = "qx";
    } else {
        j["kind"] = "fp";
        j["p"] = std::get<FpRational>(f).p;
    }
    return j;
}

// ---- models -------------------------------------------------------------------------

template <typename S>
    requires S::function_field
ProjectiveModel<S> model_from_json(const S& s, const Json& j) {
    if (!j.is_object() || !j.contains("gens") || !j.contains("witness"))
        throw ParseError("model: expected gens and witness");
    std::vector<typename S::Elem> gens;
    for (const auto& g : j["gens"]) gens.push_back(parse_elem(s, g.get<std::string>()));
    return ProjectiveModel<S>(s, std::move(gens), j["witness"].get<std::string>());
}

template <typename S>
    requires S::function_field
Json model_json(const S& s, const ProjectiveModel<S>& m) {
    Json gens = Json::array();
    for (const auto& g : m.gens()) gens.push_back(elem_to_string(s, g));
    Json j;
    j["gens"] = gens;
    j["witness"] = m.witness();
    return j;
}

// ---- digest ----------------------------------------------------------------------------

inline std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace zariski
