#pragma once

// The command layer behind the zr binary: workspace-driven operator
// dispatch, named verification suites, DOT rendering and the query
// catalogue. Commands return a Report document plus a process exit
// code; reports are byte-deterministic for identical inputs and flags
// (0 pass, 1 verification failure, 2 input error, 3 inconclusive).

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "zariski/dot.hpp"
#include "zariski/json_io.hpp"
#include "zariski/kronecker.hpp"
#include "zariski/suites.hpp"

namespace zariski {

struct CliOptions {
    std::size_t probe = 64;
    int poset_max = 5;
    uint64_t seed = 42;
    int trials = 100;
    std::string format = "json";
};

struct CommandOutcome {
    Json report;
    std::string text;  // set for dot output and text format
    int exit_code = 0;
};

namespace cli_detail {

inline Json options_json(const CliOptions& o) {
    Json j;
    j["probe"] = o.probe;
    j["poset-max"] = o.poset_max;
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    return j;
}

inline Json make_report(const std::string& command, Json inputs, Json results,
                        const CliOptions& o) {
    Json r;
    r["command"] = command;
    r["inputs"] = inputs;
    r["digest"] = fnv1a_digest(inputs.dump());
    r["bounds"] = options_json(o);
    r["results"] = std::move(results);
    return r;
}

inline const Json& ws_section(const Json& ws, const std::string& section,
                              const std::string& name) {
    if (!ws.contains(section) || !ws[section].contains(name))
        throw ParseError("workspace: no " + section + " entry named '" + name + "'");
    return ws[section][name];
}

template <typename S>
ProjectiveModel<S> load_model(const S& s, const Json& ws, const std::string& name) {
    if constexpr (S::function_field) {
        return model_from_json(s, ws_section(ws, "models", name));
    } else {
        throw ParseError("models require a function-field setting");
    }
}

}  // namespace cli_detail

// ---- op -------------------------------------------------------------------------

inline CommandOutcome cmd_op(const Json& ws, const std::string& space_ref,
                             const std::string& subset_ref, const std::string& op,
                             const CliOptions& opts) {
    using namespace cli_detail;
    Json inputs;
    inputs["space"] = space_ref;
    inputs["subset"] = subset_ref;
    inputs["op"] = op;

    const Json& sub_json = ws_section(ws, "subsets", subset_ref);
    std::string declared = sub_json.value("space", "zr");
    if (declared != space_ref)
        throw ParseError("subset '" + subset_ref + "' lives on space '" + declared + "'");

    Json results;
    if (space_ref == "zr") {
        FieldSpec field = field_from_json(ws.at("field"));
        std::visit(
            [&](const auto& s) {
                auto space = zr_space(s);
                auto z = subset_from_json(s, space, sub_json);
                SubsetDesc<Place<std::decay_t<decltype(s)>>> out;
                if (op == "cl") out = space.cl(z);
                else if (op == "gen") out = space.gen(z);
                else if (op == "inv") out = space.inv(z);
                else if (op == "patch") out = space.patch(z);
                else if (op == "pt") out = space.pt(z);
                else throw ParseError("unknown operator: " + op);
                results["subset"] = subset_json(s, out);
            },
            field);
    } else {
        auto nspace = finite_space_from_json(ws_section(ws, "spaces", space_ref));
        PointSet y = members_from_json(nspace, sub_json);
        PointSet out;
        if (op == "cl") out = cl(nspace.space, y);
        else if (op == "gen") out = gen(nspace.space, y);
        else if (op == "inv") out = inv(nspace.space, y);
        else if (op == "patch") out = patch(nspace.space, y);
        else if (op == "pt") out = pt(nspace.space, y);
        else throw ParseError("unknown operator: " + op);
        results["subset"] = members_json(nspace, out);
    }
    return CommandOutcome{make_report("op", inputs, results, opts), "", 0};
}

// ---- verify ---------------------------------------------------------------------

inline CommandOutcome cmd_verify(const std::string& suite, const CliOptions& opts) {
    using namespace cli_detail;
    SuiteResult r;
    if (suite == "spectral-basics") r = suite_spectral_basics(opts.poset_max);
    else if (suite == "new-qc") r = suite_new_qc(opts.poset_max);
    else if (suite == "pick-up-extra") r = suite_pick_up_extra(std::min(opts.poset_max, 4));
    else if (suite == "fundamental") r = suite_fundamental(opts.trials, opts.probe, opts.seed);
    else if (suite == "top-prelim") r = suite_top_prelim(opts.trials, opts.probe, opts.seed);
    else if (suite == "affine-scheme") r = suite_affine_scheme(opts.trials, opts.seed);
    else if (suite == "kuhlmann-density") r = suite_kuhlmann_density(opts.probe);
    else if (suite == "geom-prufer") r = suite_geom_prufer(opts.seed);
    else throw ParseError("unknown suite: " + suite);

    Json inputs;
    inputs["suite"] = suite;
    Json prop;
    prop["name"] = r.name;
    prop["pass"] = r.pass();
    prop["cases"] = r.cases;
    prop["failures"] = r.failures;
    prop["notes"] = r.notes;
    Json sb;
    for (const auto& [k, v] : r.bounds) sb[k] = v;
    prop["suite-bounds"] = sb;
    Json results;
    results["propositions"] = Json::array({prop});
    results["pass"] = r.pass();
    CommandOutcome out{make_report("verify", inputs, results, opts), "", r.pass() ? 0 : 1};
    std::ostringstream os;
    os << r.name << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.cases << " cases, "
       << r.failures << " failures)\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    out.text = os.str();
    return out;
}

// ---- dot ------------------------------------------------------------------------

inline CommandOutcome cmd_dot(const Json& ws, const std::string& target,
                              const CliOptions& opts) {
    using namespace cli_detail;
    auto colon = target.find(':');
    if (colon == std::string::npos) throw ParseError("dot target is kind:name");
    std::string kind = target.substr(0, colon), name = target.substr(colon + 1);
    std::string dot;
    if (kind == "space") {
        auto nspace = finite_space_from_json(ws_section(ws, "spaces", name));
        dot = hasse_dot(nspace.space, nspace.names, name);
    } else if (kind == "system" || kind == "model") {
        FieldSpec field = field_from_json(ws.at("field"));
        std::visit(
            [&](const auto& s) {
                using S = std::decay_t<decltype(s)>;
                if constexpr (S::function_field) {
                    if (kind == "model") {
                        auto m = load_model(s, ws, name);
                        dot = fibers_dot(s, m, opts.probe, name);
                    } else {
                        const Json& sys = ws_section(ws, "systems", name);
                        std::vector<ProjectiveModel<S>> models;
                        std::vector<std::string> names;
                        for (const auto& mn : sys.at("models")) {
                            names.push_back(mn.get<std::string>());
                            models.push_back(load_model(s, ws, names.back()));
                        }
                        ProjectiveSystem<S> system(std::move(models), opts.probe);
                        dot = domination_dot(system, names);
                    }
                } else {
                    throw ParseError("models require a function-field setting");
                }
            },
            field);
    } else {
        throw ParseError("unknown dot target kind: " + kind);
    }
    Json inputs;
    inputs["target"] = target;
    Json results;
    results["dot"] = dot;
    return CommandOutcome{make_report("dot", inputs, results, opts), dot, 0};
}

// ---- query ----------------------------------------------------------------------

namespace cli_detail {

template <typename S>
typename BasePolyFor<S>::type base_poly_from(const S& s, const std::string& text) {
    auto tr = parse_trational(s, text);
    if (!tr.den.is_constant()) throw ParseError("expected a polynomial in T");
    auto poly = tr.num;
    if (!tr.den.is_zero() && !tr.den[0].is_one()) {
        // divide through by the constant denominator
        std::vector<typename S::Elem> cs(poly.coeffs());
        for (auto& c : cs) c = c / tr.den[0];
        poly = TPoly<S>(std::move(cs));
    }
    if constexpr (std::is_same_v<S, QOverZ>) {
        return poly;
    } else {
        std::vector<typename std::conditional_t<std::is_same_v<S, FpRational>, Fp, Rational>>
            base;
        for (const auto& c : poly.coeffs()) {
            if (!c.is_constant()) throw ParseError("coefficients must be constants of the base");
            if constexpr (std::is_same_v<S, FpRational>) {
                base.push_back(c.is_zero() ? Fp(0, s.p) : c.num()[0] / c.den()[0]);
            } else {
                base.push_back(c.is_zero() ? Rational(0) : c.num()[0] / c.den()[0]);
            }
        }
        return typename BasePolyFor<S>::type(std::move(base));
    }
}

template <typename S>
Json run_query(const S& s, const Json& ws, const Json& q, const CliOptions& opts) {
    auto space = zr_space(s);
    std::string type = q.at("type").get<std::string>();
    auto subset_arg = [&](const char* key = "subset") {
        return subset_from_json(s, space, ws_section(ws, "subsets", q.at(key).get<std::string>()));
    };
    Json res;
    res["type"] = type;

    if (type == "op") {
        auto z = subset_arg();
        std::string op = q.at("op").get<std::string>();
        SubsetDesc<Place<S>> o;
        if (op == "cl") o = space.cl(z);
        else if (op == "gen") o = space.gen(z);
        else if (op == "inv") o = space.inv(z);
        else if (op == "patch") o = space.patch(z);
        else if (op == "pt") o = space.pt(z);
        else throw ParseError("unknown operator: " + op);
        res["subset"] = subset_json(s, o);
    } else if (type == "value" || type == "gauss") {
        auto v = place_from_json(s, q.at("place"));
        if (type == "value") {
            auto a = parse_elem(s, q.at("element").get<std::string>());
            res["value"] = place_value(s, v, a).to_string();
        } else {
            auto h = parse_trational(s, q.at("element").get<std::string>());
            res["value"] = gauss_value(s, v, h).to_string();
        }
    } else if (type == "residue-degree") {
        auto v = place_from_json(s, q.at("place"));
        res["degree"] = residue_degree(s, v);
        res["characteristic"] = residue_characteristic(s, v).to_string();
    } else if (type == "member") {
        auto z = subset_arg();
        auto a = parse_elem(s, q.at("element").get<std::string>());
        res["member"] = intersection_member(s, z, a);
    } else if (type == "star") {
        auto v = place_from_json(s, q.at("place"));
        auto h = parse_trational(s, q.at("element").get<std::string>());
        res["member"] = in_star(s, v, h);
    } else if (type == "kronecker") {
        auto z = subset_arg();
        auto h = parse_trational(s, q.at("element").get<std::string>());
        res["member"] = in_kronecker(s, space, z, h);
    } else if (type == "nagata") {
        auto h = parse_trational(s, q.at("element").get<std::string>());
        res["member"] = in_nagata(s, h.num, h.den);
    } else if (type == "content") {
        if constexpr (std::is_same_v<S, QOverZ>) {
            auto f = base_poly_from(s, q.at("f").get<std::string>());
            auto g = base_poly_from(s, q.at("g").get<std::string>());
            res["holds"] = content_criterion(f, g);
        } else {
            throw ParseError("content criterion is the integer instance");
        }
    } else if (type == "inv-kr") {
        auto r = inv_via_kronecker(s, space, subset_arg(), opts.probe);
        res["inv"] = subset_json(s, r.inv);
        Json seps = Json::array();
        for (const auto& sep : r.separators) {
            Json e;
            e["excluded"] = place_json(s, sep.excluded);
            e["element"] = elem_to_string(s, sep.element);
            seps.push_back(e);
        }
        res["separators"] = seps;
    } else if (type == "ring") {
        auto d = ring_desc(s, subset_arg());
        res["kind"] = ring_kind_name(d.kind);
        Json places = Json::array();
        for (const auto& p : d.places) places.push_back(place_json(s, p));
        res["places"] = places;
    } else if (type == "affine") {
        auto a = affine_test(s, space, subset_arg());
        res["affine"] = a.affine;
        res["ring"] = ring_kind_name(a.ring);
        res["reason"] = a.reason;
    } else if (type == "witness") {
        std::vector<typename S::Elem> tuple;
        for (const auto& t : q.at("tuple")) tuple.push_back(parse_elem(s, t.get<std::string>()));
        auto w = prufer_witness(s, space, subset_arg(), tuple);
        res["ideal-gen"] = elem_to_string(s, w.ideal_gen);
        Json bj = Json::array();
        for (const auto& b : w.b) bj.push_back(elem_to_string(s, b));
        res["b"] = bj;
        Json aj = Json::array();
        for (const auto& row : w.a) {
            Json rj = Json::array();
            for (const auto& e : row) rj.push_back(elem_to_string(s, e));
            aj.push_back(rj);
        }
        res["a"] = aj;
        Json gj = Json::array();
        for (const auto& g : w.ring_gens) gj.push_back(elem_to_string(s, g));
        res["ring-gens"] = gj;
    } else if (type == "pt-max") {
        auto r = pt_via_max(s, space, subset_arg(), opts.probe);
        res["pt"] = subset_json(s, r.pt);
        Json certs = Json::array();
        for (const auto& c : r.certificates) {
            Json e;
            e["place"] = place_json(s, c.place);
            e["element"] = trational_to_string(s, c.element);
            certs.push_back(e);
        }
        res["certificates"] = certs;
    } else if (type == "localize") {
        std::vector<typename S::Elem> inverted;
        for (const auto& e : q.at("elements"))
            inverted.push_back(parse_elem(s, e.get<std::string>()));
        res["subset"] = subset_json(s, localization_subset(s, space, subset_arg(), inverted));
    } else if (type == "no-root") {
        auto m = base_poly_from(s, q.at("poly").get<std::string>());
        auto r = monic_no_root_subset(s, space, m, opts.probe);
        res["representable"] = r.representable;
        if (r.representable) res["subset"] = subset_json(s, r.subset);
        auto dec = [](Decision d) {
            return d == Decision::yes ? "yes" : d == Decision::no ? "no" : "unknown";
        };
        res["generic"] = dec(r.generic);
        Json probed = Json::array();
        for (const auto& [place, d] : r.probed) {
            Json e;
            e["place"] = place_json(s, place);
            e["in"] = dec(d);
            probed.push_back(e);
        }
        res["probed"] = probed;
        res["note"] = r.note;
    } else if (type == "center" || type == "same-center") {
        if constexpr (S::function_field) {
            auto m = load_model(s, ws, q.at("model").get<std::string>());
            auto v = place_from_json(s, q.at("place"));
            if (type == "center") {
                res["point"] = model_key_json(s, m.center(v));
            } else {
                auto w = place_from_json(s, q.at("place2"));
                res["same"] = m.same_center(v, w);
            }
        } else {
            throw ParseError("models require a function-field setting");
        }
    } else if (type == "dominates") {
        if constexpr (S::function_field) {
            auto y = load_model(s, ws, q.at("left").get<std::string>());
            auto x = load_model(s, ws, q.at("right").get<std::string>());
            auto d = dominates(y, x, opts.probe);
            res["holds"] = d.holds;
            res["probe-limited"] = d.probe_limited;
            res["failure"] = d.failure;
        } else {
            throw ParseError("models require a function-field setting");
        }
    } else if (type == "model-space") {
        if constexpr (S::function_field) {
            auto m = load_model(s, ws, q.at("model").get<std::string>());
            auto sp = model_space(m, opts.probe);
            std::size_t count = q.value("count", std::size_t{8});
            Json pts = Json::array();
            for (std::size_t i = 0; i < count; ++i)
                pts.push_back(model_key_json(s, sp.closed_point(i)));
            res["points"] = pts;
        } else {
            throw ParseError("models require a function-field setting");
        }
    } else if (type == "limit") {
        if constexpr (S::function_field) {
            const Json& sys = ws_section(ws, "systems", q.at("system").get<std::string>());
            std::vector<ProjectiveModel<S>> models;
            for (const auto& mn : sys.at("models"))
                models.push_back(load_model(s, ws, mn.get<std::string>()));
            ProjectiveSystem<S> system(std::move(models), opts.probe);
            auto r = limit_ops(system, space, subset_arg());
            res["inv"] = subset_json(s, r.inv);
            res["patch"] = subset_json(s, r.patch);
            res["pt"] = subset_json(s, r.pt);
            res["probe-limited"] = r.probe_limited;
        } else {
            throw ParseError("models require a function-field setting");
        }
    } else {
        throw ParseError("unknown query type: " + type);
    }
    return res;
}

}  // namespace cli_detail

inline CommandOutcome cmd_query(const Json& ws, const std::string& name,
                                const CliOptions& opts) {
    using namespace cli_detail;
    const Json& q = ws_section(ws, "queries", name);
    FieldSpec field = field_from_json(ws.at("field"));
    Json results;
    std::visit([&](const auto& s) { results = run_query(s, ws, q, opts); }, field);
    Json inputs;
    inputs["query"] = name;
    inputs["definition"] = q;
    return CommandOutcome{make_report("query", inputs, results, opts), "", 0};
}

// ---- file plumbing and the argv front end ------------------------------------------

inline Json load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open workspace: " + path);
    Json ws;
    try {
        in >> ws;
    } catch (const std::exception& e) {
        throw ParseError(std::string("workspace JSON: ") + e.what());
    }
    return ws;
}

}  // namespace zariski
