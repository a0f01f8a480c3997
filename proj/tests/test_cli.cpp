#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zariski/cli.hpp"

using namespace zariski;

namespace {

Json demo_fp5() {
    static const char* text = R"({
      "field": {"kind": "fp", "p": 5},
      "spaces": {
        "chain2": {"points": ["c", "g"], "leq": [["c", "g"]]}
      },
      "subsets": {
        "closed-pt": {"space": "chain2", "members": ["c"]},
        "no-x": {"space": "zr", "closed": {"cofinite": [{"kind": "poly", "value": "x"}]}, "generic": false},
        "slice": {"space": "zr", "closed": {"cofinite": [{"kind": "infinity"}]}, "generic": true}
      },
      "models": {
        "line": {"gens": ["1", "x"], "witness": "g1/g0"},
        "nodal": {"gens": ["1", "x^2-1", "x^3-x"], "witness": "g2/g1"}
      },
      "systems": {"sys": {"models": ["line", "nodal"]}},
      "queries": {
        "q-inv": {"type": "op", "space": "zr", "subset": "no-x", "op": "inv"},
        "q-kr": {"type": "kronecker", "subset": "no-x", "element": "1/x"},
        "q-affine": {"type": "affine", "subset": "slice"},
        "q-center": {"type": "center", "model": "nodal", "place": "x-1"},
        "q-same": {"type": "same-center", "model": "nodal", "place": "x-1", "place2": "x+1"},
        "q-dom": {"type": "dominates", "left": "line", "right": "nodal"},
        "q-limit": {"type": "limit", "system": "sys", "subset": "no-x"},
        "q-witness": {"type": "witness", "subset": "slice", "tuple": ["1", "x"]}
      }
    })";
    return Json::parse(text);
}

}  // namespace

TEST_CASE("cmd_op on a finite space") {
    CliOptions opts;
    auto out = cmd_op(demo_fp5(), "chain2", "closed-pt", "inv", opts);
    CHECK(out.exit_code == 0);
    auto members = out.report["results"]["subset"]["members"];
    CHECK(members == Json::array({"c", "g"}));
    auto out2 = cmd_op(demo_fp5(), "chain2", "closed-pt", "patch", opts);
    CHECK(out2.report["results"]["subset"]["members"] == Json::array({"c"}));
}

TEST_CASE("cmd_op on the Zariski-Riemann space") {
    CliOptions opts;
    auto out = cmd_op(demo_fp5(), "zr", "no-x", "patch", opts);
    CHECK(out.exit_code == 0);
    const auto& sub = out.report["results"]["subset"];
    CHECK(sub["generic"] == true);
    CHECK(sub["closed"].contains("cofinite"));
    CHECK(sub["closed"]["cofinite"].size() == 1);
    CHECK(sub["closed"]["cofinite"][0]["value"] == "x");
}

TEST_CASE("reports are byte-deterministic") {
    CliOptions opts;
    auto a = cmd_op(demo_fp5(), "zr", "no-x", "inv", opts).report.dump(2);
    auto b = cmd_op(demo_fp5(), "zr", "no-x", "inv", opts).report.dump(2);
    CHECK(a == b);
    auto qa = cmd_query(demo_fp5(), "q-witness", opts).report.dump(2);
    auto qb = cmd_query(demo_fp5(), "q-witness", opts).report.dump(2);
    CHECK(qa == qb);
    CHECK(a.find("digest") != std::string::npos);
}

TEST_CASE("subset serializations round-trip") {
    FpRational f5{5};
    auto space = zr_space(f5);
    auto z = space.make_cofinite({parse_place(f5, "x"), Place<FpRational>::infinity()}, true);
    auto j = subset_json(f5, z);
    auto z2 = subset_from_json(f5, space, j);
    CHECK(space.equal(z, z2));
    auto p = parse_place(f5, "x^2+2");
    CHECK(place_equal(f5, p, place_from_json(f5, place_json(f5, p))));
    // models round-trip through their JSON form
    auto m = model_from_json(f5, demo_fp5()["models"]["nodal"]);
    auto j2 = model_json(f5, m);
    auto m2 = model_from_json(f5, j2);
    CHECK(m2.gens().size() == 3);
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(m.center(nth_place(f5, i)) == m2.center(nth_place(f5, i)));
}

TEST_CASE("queries drive the kronecker and model layers") {
    CliOptions opts;
    auto ws = demo_fp5();
    CHECK(cmd_query(ws, "q-kr", opts).report["results"]["member"] == true);
    CHECK(cmd_query(ws, "q-affine", opts).report["results"]["affine"] == true);
    CHECK(cmd_query(ws, "q-same", opts).report["results"]["same"] == true);
    CHECK(cmd_query(ws, "q-dom", opts).report["results"]["holds"] == true);
    auto lim = cmd_query(ws, "q-limit", opts).report["results"];
    CHECK(lim["inv"]["generic"] == true);
    CHECK(lim["pt"]["generic"] == false);
    auto wit = cmd_query(ws, "q-witness", opts).report["results"];
    CHECK(wit["ideal-gen"] == "1");
    auto center = cmd_query(ws, "q-center", opts).report["results"]["point"];
    CHECK(center["chart"] == 0);
    CHECK(center["residues"]["coords"] == Json::parse("[[1],[0],[0]]"));
}

TEST_CASE("cmd_verify reports propositions and failure exit codes") {
    CliOptions opts;
    opts.poset_max = 3;
    opts.trials = 5;
    opts.probe = 16;
    auto ok = cmd_verify("spectral-basics", opts);
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["results"]["pass"] == true);
    CHECK(ok.report["results"]["propositions"][0]["failures"] == 0);
    // the pick-up-extra suite reports its documented failures honestly
    auto pue = cmd_verify("pick-up-extra", opts);
    CHECK(pue.exit_code == 1);
    CHECK(pue.report["results"]["pass"] == false);
    CHECK_THROWS_AS(cmd_verify("no-such-suite", opts), ParseError);
}

TEST_CASE("cmd_dot renders spaces, systems and fibers") {
    CliOptions opts;
    opts.probe = 12;
    auto ws = demo_fp5();
    auto space_dot = cmd_dot(ws, "space:chain2", opts).text;
    CHECK(space_dot.find("digraph") != std::string::npos);
    CHECK(space_dot.find("\"c\"") != std::string::npos);
    CHECK(space_dot.find("->") != std::string::npos);
    auto sys_dot = cmd_dot(ws, "system:sys", opts).text;
    CHECK(sys_dot.find("\"line\"") != std::string::npos);
    CHECK(sys_dot.find("m0 -> m1") != std::string::npos);  // the line dominates the nodal model
    auto fib_dot = cmd_dot(ws, "model:nodal", opts).text;
    CHECK(fib_dot.find("chart 0") != std::string::npos);
    // two places share the node: one box has two incoming edges
    std::size_t count = 0, pos = 0;
    std::string needle = "-> k2";  // dedup order: infinity=k0, x=k1, node=k2
    while ((pos = fib_dot.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    CHECK(count >= 1);
    CHECK_THROWS_AS(cmd_dot(ws, "nonsense", opts), ParseError);
    CHECK_THROWS_AS(cmd_dot(ws, "space:void", opts), ParseError);
}

TEST_CASE("input errors surface as parse errors") {
    CliOptions opts;
    auto ws = demo_fp5();
    CHECK_THROWS_AS(cmd_op(ws, "zr", "nope", "inv", opts), ParseError);
    CHECK_THROWS_AS(cmd_op(ws, "chain2", "no-x", "inv", opts), ParseError);  // wrong space
    CHECK_THROWS_AS(cmd_op(ws, "zr", "no-x", "frobnicate", opts), ParseError);
    auto bad = ws;
    bad["subsets"]["broken"] = Json::parse(R"({"space":"zr","closed":{"finite":[{"kind":"poly","value":"x^2-1"}]},"generic":false})");
    CHECK_THROWS(cmd_op(bad, "zr", "broken", "inv", opts));  // reducible place key
}

TEST_CASE("queries over the integers") {
    CliOptions opts;
    auto ws = Json::parse(R"js({
      "field": {"kind": "qz"},
      "subsets": {
        "all": {"space": "zr", "closed": {"cofinite": []}, "generic": true}
      },
      "queries": {
        "aff": {"type": "affine", "subset": "all"},
        "content": {"type": "content", "f": "2T+6", "g": "4T+2"},
        "halves": {"type": "witness", "subset": "all", "tuple": ["1", "1/2"]},
        "gauss": {"type": "gauss", "place": "2", "element": "(2T+4)/(T+1)"}
      }
    })js");
    CHECK(cmd_query(ws, "aff", opts).report["results"]["affine"] == true);
    CHECK(cmd_query(ws, "content", opts).report["results"]["holds"] == true);
    auto wit = cmd_query(ws, "halves", opts).report["results"];
    CHECK(wit["ideal-gen"] == "1/2");
    CHECK(wit["b"] == Json::array({"0", "1"}));
    CHECK(cmd_query(ws, "gauss", opts).report["results"]["value"] == "1");
}
