#pragma once

#include "tuttepo/bipoly.hpp"
#include "tuttepo/errors.hpp"
#include "tuttepo/families.hpp"
#include "tuttepo/invariants.hpp"
#include "tuttepo/multigraph.hpp"
#include "tuttepo/poset.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tuttepo {

using Json = nlohmann::ordered_json;

/// Parses the edge-list format: a header "n m", then m lines "u v" with
/// 0-based endpoints. Lines starting with '#' and blank lines are skipped.
inline Multigraph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) { throw DomainError("edge list line " + std::to_string(line_no) + ": " + why); };
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        long long a = 0, b = 0;
        if (!(fields >> a >> b))
            fail("expected two integers");
        std::string extra;
        if (fields >> extra)
            fail("unexpected text '" + extra + "'");
        if (!have_header) {
            if (a < 0 || b < 0)
                fail("negative count");
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (a < 0 || b < 0 || a >= n || b >= n)
            fail("endpoint out of range");
        edges.emplace_back(Vertex(a), Vertex(b));
    }
    if (!have_header)
        throw DomainError("edge list is empty");
    if (std::size_t(m) != edges.size())
        throw DomainError("edge list header promises " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Multigraph(std::size_t(n), std::move(edges));
}

inline std::string format_edge_list(const Multigraph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

inline Multigraph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

/// A family-DSL string, or "@path" naming an edge-list file.
inline Multigraph parse_graph_argument(const std::string& arg)
{
    if (!arg.empty() && arg[0] == '@')
        return read_edge_list_file(arg.substr(1));
    return build(parse_family(arg));
}

inline Json to_json(const BiPoly& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back(Json::array({m.x, m.y, c.str()}));
    return out;
}

inline BiPoly bipoly_from_json(const Json& j)
{
    if (!j.is_array())
        throw DomainError("polynomial JSON must be an array");
    BiPoly p;
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
            !t[2].is_string())
            throw DomainError("polynomial term must be [xdeg, ydeg, \"coefficient\"]");
        Integer c;
        try {
            c = Integer(t[2].get<std::string>());
        } catch (const std::exception&) {
            throw DomainError("bad coefficient '" + t[2].get<std::string>() + "'");
        }
        p.add_term(t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(), c);
    }
    return p;
}

inline Json edges_json(const Multigraph& g)
{
    Json out = Json::array();
    for (const Edge& e : g.edges())
        out.push_back(Json::array({e.u, e.v}));
    return out;
}

inline Json to_json(const TuttePoset& p)
{
    Json nodes = Json::array();
    for (const PosetNode& node : p.nodes()) {
        Json members = Json::array();
        for (const Multigraph& g : node.member_graphs)
            members.push_back(edges_json(g));
        nodes.push_back({{"tutte", node.tutte.to_string()}, {"members", members}, {"size", node.members.size()}});
    }
    Json covers = Json::array();
    for (auto [i, j] : p.cover_edges())
        covers.push_back(Json::array({i, j}));
    const MaximalElements top = maximal_elements(p);
    return {{"spec", {{"n", p.spec().n}, {"m", p.spec().m}}},
            {"nodes", nodes},
            {"cover_edges", covers},
            {"maximal", top.indices},
            {"unique_maximum", top.unique_maximum}};
}

inline std::string node_label(const PosetNode& node)
{
    if (auto name = recognize_family(node.representative()))
        return *name;
    return to_edge_string(node.representative());
}

/// Graphviz digraph of the cover relation, lower class to upper class.
inline std::string to_dot(const TuttePoset& p)
{
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "digraph tutte_poset_" << p.spec().n << '_' << p.spec().m << " {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const PosetNode& node = p.nodes()[i];
        std::string label = node_label(node);
        if (node.members.size() > 1)
            label += " (+" + std::to_string(node.members.size() - 1) + ")";
        out << "  n" << i << " [label=" << quote(label) << ", tooltip=" << quote(node.tutte.to_string()) << "];\n";
    }
    for (auto [i, j] : p.cover_edges())
        out << "  n" << i << " -> n" << j << ";\n";
    out << "}\n";
    return out.str();
}

inline Json to_json(const ParamTable& t)
{
    Json out = Json::object();
    const auto values = t.values();
    for (std::size_t k = 0; k < ParamTable::size; ++k)
        out[ParamTable::names()[k]] = values[k].str();
    return out;
}

} // namespace tuttepo
