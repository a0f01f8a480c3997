// zr: exact topological operators on finite spectral spaces and on the
// Zariski-Riemann spaces of Q/Z, F_p(x)/F_p and Q(x)/Q, with
// verification suites, model queries and DOT renderings.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "zariski/cli.hpp"

using namespace zariski;

namespace {

void print_outcome(const CommandOutcome& out, const CliOptions& opts) {
    if (opts.format == "text" || opts.format == "dot") {
        if (!out.text.empty()) {
            std::fputs(out.text.c_str(), stdout);
            return;
        }
    }
    std::fputs(out.report.dump(2).c_str(), stdout);
    std::fputs("\n", stdout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operators on spectral spaces and Zariski-Riemann spaces"};
    app.require_subcommand(1);

    CliOptions opts;
    std::string ws_path, space_ref, subset_ref, op_name, suite, target, query_name;
    bool query_all = false;

    auto add_bounds = [&](CLI::App* c) {
        c->add_option("--probe", opts.probe, "probe bound for place enumeration");
        c->add_option("--poset-max", opts.poset_max, "poset size bound for exhaustive suites");
        c->add_option("--seed", opts.seed, "random seed for property suites");
        c->add_option("--trials", opts.trials, "randomized trial count");
        c->add_option("--format", opts.format, "json|text|dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
    };

    auto* c_op = app.add_subcommand("op", "apply a topological operator to a subset");
    c_op->add_option("--workspace", ws_path, "workspace JSON file")->required();
    c_op->add_option("--space", space_ref, "space name, or zr")->required();
    c_op->add_option("--subset", subset_ref, "subset name")->required();
    c_op->add_option("--op", op_name, "cl|gen|inv|patch|pt")->required();
    add_bounds(c_op);

    auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
    c_verify->add_option("--suite", suite,
                         "spectral-basics|new-qc|pick-up-extra|fundamental|top-prelim|"
                         "affine-scheme|kuhlmann-density|geom-prufer")
        ->required();
    add_bounds(c_verify);

    auto* c_dot = app.add_subcommand("dot", "render a DOT diagram");
    c_dot->add_option("--workspace", ws_path, "workspace JSON file")->required();
    c_dot->add_option("--target", target, "space:NAME | system:NAME | model:NAME")->required();
    c_dot->preparse_callback([&](std::size_t) { opts.format = "dot"; });
    add_bounds(c_dot);

    auto* c_query = app.add_subcommand("query", "run a named workspace query");
    c_query->add_option("--workspace", ws_path, "workspace JSON file")->required();
    c_query->add_option("--name", query_name, "query name");
    c_query->add_flag("--all", query_all, "run every query in order");
    add_bounds(c_query);

    CLI11_PARSE(app, argc, argv);

    try {
        CommandOutcome out;
        if (c_op->parsed()) {
            out = cmd_op(load_workspace(ws_path), space_ref, subset_ref, op_name, opts);
        } else if (c_verify->parsed()) {
            out = cmd_verify(suite, opts);
        } else if (c_dot->parsed()) {
            out = cmd_dot(load_workspace(ws_path), target, opts);
        } else if (c_query->parsed()) {
            Json ws = load_workspace(ws_path);
            if (query_all) {
                if (!ws.contains("queries")) throw ParseError("workspace has no queries");
                Json all = Json::array();
                for (auto it = ws["queries"].begin(); it != ws["queries"].end(); ++it)
                    all.push_back(cmd_query(ws, it.key(), opts).report);
                out.report = Json{{"command", "query-all"}, {"reports", all}};
            } else {
                if (query_name.empty()) throw ParseError("query needs --name or --all");
                out = cmd_query(ws, query_name, opts);
            }
        }
        print_outcome(out, opts);
        return out.exit_code;
    } catch (const InconclusiveError& e) {
        std::fprintf(stderr, "inconclusive: %s\n", e.what());
        return 3;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const Json::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    }
}
