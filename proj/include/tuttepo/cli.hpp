#pragma once

#include "tuttepo/enumerator.hpp"
#include "tuttepo/errors.hpp"
#include "tuttepo/invariants.hpp"
#include "tuttepo/io.hpp"
#include "tuttepo/parallel.hpp"
#include "tuttepo/poset.hpp"
#include "tuttepo/tutte.hpp"
#include "tuttepo/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tuttepo::cli {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_capacity = 2;
constexpr int exit_violation = 3;

namespace detail {

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw DomainError("cannot write " + path);
    file << text;
}

inline std::string compare_text(const CompareResult& r)
{
    std::string s = to_string(r.ordering);
    if (r.ordering == Ordering::Less || r.ordering == Ordering::Greater)
        s += ", witness P = " + r.witness->to_string();
    else if (r.ordering == Ordering::Incomparable)
        s += " (" + std::string(to_string(r.cause)) + ")";
    return s;
}

inline std::string poset_summary(const TuttePoset& p)
{
    const MaximalElements top = maximal_elements(p);
    std::ostringstream out;
    out << "class " << to_string(p.spec()) << ": " << p.size() << " T-classes, " << p.cover_edges().size()
        << " cover edges, " << (p.is_chain() ? "chain" : "not a chain") << '\n';
    out << "maximal: " << top.indices.size() << (top.unique_maximum ? " (unique maximum)" : "") << '\n';
    return out.str();
}

struct Options {
    unsigned threads = 0;
    std::string graph, other;
    bool json = false;
    bool polynomials = false;
    std::size_t n = 0, m = 0;
    bool count = false, list = false;
    std::string dot_path, json_path;
    std::string theorem;
    std::optional<std::size_t> verify_n;
    std::uint64_t seed = 1;
    std::size_t instances = 100;
    std::vector<int> params;
    std::string g1, g2;
};

} // namespace detail

/// Parses `args` (without the program name) and dispatches one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    detail::Options o;
    CLI::App app{"Tutte polynomials, Tutte posets of connected graph classes, and checks of their order theorems.",
                 "tuttepo"};
    app.require_subcommand(1, 1);
    app.add_option("--threads", o.threads, "Worker threads (0 = available parallelism, 1 = sequential)")
        ->check(CLI::NonNegativeNumber);
    app.footer("Graphs are family expressions (C5, K2, M3, theta:1,2,3, delta:a,b,c,d,e, box:a,b,c,d,e,f,\n"
               "cyl:a,b,c,d,e,f, joined with '*') or @path naming an edge-list file.");

    auto* tutte_cmd = app.add_subcommand("tutte", "Print the Tutte polynomial of a graph");
    tutte_cmd->add_option("graph", o.graph, "Family expression or @edge-list-file")->required();
    tutte_cmd->add_flag("--json", o.json, "Print as JSON [[xdeg, ydeg, \"coefficient\"], ...]");

    auto* compare_cmd = app.add_subcommand("compare", "Decide G <= H in the Tutte poset");
    compare_cmd->add_option("G", o.graph, "Lower candidate G")->required();
    compare_cmd->add_option("H", o.other, "Upper candidate H")->required();

    auto* params_cmd = app.add_subcommand("params", "Print Tutte evaluations of a graph");
    params_cmd->add_option("graph", o.graph, "Family expression or @edge-list-file")->required();
    params_cmd->add_flag("--json", o.json, "Print as JSON {parameter: value}");
    params_cmd->add_flag("--polynomials", o.polynomials, "Also print reliability, chromatic and flow polynomials");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate connected simple graphs up to isomorphism");
    enumerate_cmd->add_option("-n", o.n, "Vertices")->required();
    enumerate_cmd->add_option("-m", o.m, "Edges")->required();
    auto* count_flag = enumerate_cmd->add_flag("--count", o.count, "Print the number of classes (default)");
    enumerate_cmd->add_flag("--list", o.list, "Print one edge list per line")->excludes(count_flag);

    auto* poset_cmd = app.add_subcommand("poset", "Build the (n,m) Tutte poset");
    poset_cmd->add_option("-n", o.n, "Vertices")->required();
    poset_cmd->add_option("-m", o.m, "Edges")->required();
    poset_cmd->add_option("--dot", o.dot_path, "Write the Hasse diagram as Graphviz DOT ('-' = stdout)");
    poset_cmd->add_option("--json", o.json_path, "Write the poset as JSON ('-' = stdout)");

    auto* maximal_cmd = app.add_subcommand("maximal", "List the maximal classes of the (n,m) Tutte poset");
    maximal_cmd->add_option("-n", o.n, "Vertices")->required();
    maximal_cmd->add_option("-m", o.m, "Edges")->required();
    maximal_cmd->add_flag("--json", o.json, "Print as JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Check an order theorem computationally");
    std::string names = "all";
    for (const std::string& name : theorem_names())
        names += ", " + name;
    verify_cmd->add_option("theorem", o.theorem, "One of: " + names)->required();
    verify_cmd->add_option("-n", o.verify_n, "Class size for the structural suites");
    verify_cmd->add_option("--seed", o.seed, "Seed for randomized instances");
    verify_cmd->add_option("--instances", o.instances, "Randomized instances per move suite")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--params", o.params, "Explicit integer parameters, e.g. 5,2 for cycle-evening")
        ->delimiter(',');
    verify_cmd->add_option("--g1", o.g1, "comb-move: block G1 (joined at its vertex 0)");
    verify_cmd->add_option("--g2", o.g2, "comb-move: block G2 (joined at its vertex 0)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_domain;
    }

    set_thread_count(o.threads);
    try {
        const TutteEngine& engine = default_engine();
        if (*tutte_cmd) {
            const BiPoly t = engine.tutte(parse_graph_argument(o.graph));
            out << (o.json ? to_json(t).dump() : t.to_string()) << '\n';
        } else if (*compare_cmd) {
            out << detail::compare_text(compare(parse_graph_argument(o.graph), parse_graph_argument(o.other), engine))
                << '\n';
        } else if (*params_cmd) {
            const Multigraph g = parse_graph_argument(o.graph);
            const ParamTable table = param_table(g, engine);
            if (o.json) {
                Json j = to_json(table);
                if (o.polynomials) {
                    j["reliability"] = reliability(g, engine).to_string("p");
                    j["chromatic"] = chromatic(g, engine).to_string("k");
                    j["flow"] = flow(g, engine).to_string("k");
                }
                out << j.dump(2) << '\n';
            } else {
                out << param_table_text(table);
                if (o.polynomials) {
                    out << std::left << std::setw(30) << "reliability" << reliability(g, engine).to_string("p") << '\n';
                    out << std::left << std::setw(30) << "chromatic" << chromatic(g, engine).to_string("k") << '\n';
                    out << std::left << std::setw(30) << "flow" << flow(g, engine).to_string("k") << '\n';
                }
            }
        } else if (*enumerate_cmd) {
            if (o.list) {
                for (const Multigraph& g : enumerate_connected({o.n, o.m}))
                    out << to_edge_string(g) << '\n';
            } else {
                out << count_connected({o.n, o.m}) << '\n';
            }
        } else if (*poset_cmd) {
            if (o.dot_path == "-" && o.json_path == "-")
                throw DomainError("only one of --dot and --json may write to stdout");
            const TuttePoset p = build_poset({o.n, o.m}, {}, engine);
            if (!o.dot_path.empty())
                detail::write_output(o.dot_path, to_dot(p), out);
            if (!o.json_path.empty())
                detail::write_output(o.json_path, to_json(p).dump(2) + "\n", out);
            if (o.dot_path != "-" && o.json_path != "-")
                out << detail::poset_summary(p);
        } else if (*maximal_cmd) {
            const TuttePoset p = build_poset({o.n, o.m}, {}, engine);
            const MaximalElements top = maximal_elements(p);
            if (o.json) {
                Json nodes = Json::array();
                for (std::size_t i : top.indices)
                    nodes.push_back({{"index", i},
                                     {"label", node_label(p.nodes()[i])},
                                     {"tutte", p.nodes()[i].tutte.to_string()},
                                     {"size", p.nodes()[i].members.size()}});
                out << Json{{"maximal", nodes}, {"unique_maximum", top.unique_maximum}}.dump(2) << '\n';
            } else {
                for (std::size_t i : top.indices)
                    out << "n" << i << "  " << node_label(p.nodes()[i]) << "  " << p.nodes()[i].tutte << '\n';
                out << (top.unique_maximum ? "unique maximum" : "no unique maximum") << '\n';
            }
        } else if (*verify_cmd) {
            VerifyParams vp;
            vp.n = o.verify_n;
            vp.seed = o.seed;
            vp.instances = o.instances;
            vp.args = o.params;
            if (!o.g1.empty())
                vp.g1 = parse_graph_argument(o.g1);
            if (!o.g2.empty())
                vp.g2 = parse_graph_argument(o.g2);
            std::vector<VerifyReport> reports;
            if (o.theorem == "all")
                reports = verify_all(vp, engine);
            else
                reports.push_back(verify_theorem(o.theorem, vp, engine));
            bool passed = true;
            for (const VerifyReport& r : reports) {
                out << r.to_text();
                passed = passed && r.passed();
            }
            if (!passed) {
                err << "verification failed\n";
                return exit_violation;
            }
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_capacity;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}

} // namespace tuttepo::cli
