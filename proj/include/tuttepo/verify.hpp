#pragma once

#include "tuttepo/families.hpp"
#include "tuttepo/multigraph.hpp"
#include "tuttepo/poset.hpp"
#include "tuttepo/tutte.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tuttepo {

struct VerifyParams {
    std::optional<std::size_t> n;
    std::uint64_t seed = 1;
    std::size_t instances = 100;
    /// Explicit parameters for move theorems (e.g. a,b for cycle-evening);
    /// when empty, instances are drawn at random from `seed`.
    std::vector<int> args;
    /// Explicit blocks for comb-move, joined at vertex 0 of each.
    std::optional<Multigraph> g1, g2;
};

struct VerifyInstance {
    std::string description;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::string name;
    std::vector<VerifyInstance> instances;

    std::size_t failures() const
    {
        return std::size_t(std::count_if(instances.begin(), instances.end(), [](const auto& i) { return !i.ok; }));
    }
    bool passed() const { return !instances.empty() && failures() == 0; }

    std::string to_text() const
    {
        std::ostringstream out;
        for (const VerifyInstance& i : instances)
            out << (i.ok ? "PASS " : "FAIL ") << i.description << (i.detail.empty() ? "" : ": ") << i.detail << '\n';
        out << name << ": " << (instances.size() - failures()) << "/" << instances.size() << " passed\n";
        return out.str();
    }
};

namespace detail {

inline std::string describe(const Multigraph& g)
{
    if (auto name = recognize_family(g))
        return *name;
    return "[" + to_edge_string(g) + "]";
}

/// Checks compare(g, h) == expected, including witness soundness for Less.
inline VerifyInstance check_move(const std::string& label, const Multigraph& g, const Multigraph& h, Ordering expected,
                                 const TutteEngine& engine)
{
    VerifyInstance inst;
    inst.description = label + ": " + describe(g) + " vs " + describe(h);
    const BiPoly tg = engine.tutte(g), th = engine.tutte(h);
    const CompareResult r = compare_tutte(tg, th);
    std::ostringstream d;
    d << to_string(r.ordering);
    inst.ok = r.ordering == expected;
    if (r.ordering == Ordering::Less) {
        const bool sound = BiPoly::connector() * *r.witness == th - tg && r.witness->all_coefficients_nonnegative() &&
                           !r.witness->is_zero();
        inst.ok = inst.ok && sound;
        d << ", witness P = " << *r.witness;
        if (!sound)
            d << " (unsound witness)";
    } else if (r.ordering == Ordering::Incomparable) {
        d << " (" << to_string(r.cause) << ")";
    }
    if (r.ordering != expected)
        d << "; expected " << to_string(expected);
    inst.detail = d.str();
    return inst;
}

/// Random 2-connected simple graph: a cycle grown by up to `growth` ears.
inline Multigraph random_block(std::mt19937_64& rng, std::size_t max_edges)
{
    std::uniform_int_distribution<std::size_t> cyc(3, std::max<std::size_t>(3, std::min<std::size_t>(6, max_edges)));
    Multigraph g = cycle_graph(cyc(rng));
    for (int attempt = 0; attempt < 6 && g.edge_count() < max_edges; ++attempt) {
        std::uniform_int_distribution<Vertex> pick(0, Vertex(g.vertex_count() - 1));
        const Vertex a = pick(rng), b = pick(rng);
        if (a == b)
            continue;
        std::uniform_int_distribution<int> len(1, int(std::min<std::size_t>(3, max_edges - g.edge_count())));
        const int k = len(rng);
        if (k == 1 && std::find(g.edges().begin(), g.edges().end(), Edge(a, b)) != g.edges().end())
            continue;
        add_ear(g, a, b, k);
    }
    return g;
}

inline std::size_t random_incident_edge(std::mt19937_64& rng, const Multigraph& g, Vertex v)
{
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!g.edge(i).is_loop() && (g.edge(i).u == v || g.edge(i).v == v))
            incident.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, incident.size() - 1);
    return incident.at(pick(rng));
}

inline Vertex random_vertex(std::mt19937_64& rng, const Multigraph& g)
{
    std::uniform_int_distribution<Vertex> pick(0, Vertex(g.vertex_count() - 1));
    return pick(rng);
}

inline std::vector<int> need_args(const VerifyParams& p, std::size_t count, const char* name)
{
    if (p.args.size() != count)
        throw DomainError(std::string(name) + " takes " + std::to_string(count) + " integer parameters");
    return p.args;
}

inline std::size_t instance_count(const VerifyParams& p) { return p.args.empty() ? p.instances : 1; }

inline std::vector<std::size_t> structural_range(const VerifyParams& p, std::size_t lo, std::size_t hi,
                                                 std::size_t min_n, const char* name)
{
    if (p.n) {
        if (*p.n < min_n)
            throw DomainError(std::string(name) + " requires n >= " + std::to_string(min_n));
        return {*p.n};
    }
    std::vector<std::size_t> out;
    for (std::size_t n = lo; n <= hi; ++n)
        out.push_back(n);
    return out;
}

inline Multigraph with_bridges(Multigraph g, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i)
        g = join_at(g, 0, multiedge_graph(1), 0);
    return g;
}

// --- structural theorems -------------------------------------------------

inline VerifyReport verify_gnn_chain(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"gnn-chain", {}};
    for (std::size_t n : structural_range(p, 4, 9, 3, "gnn-chain")) {
        const TuttePoset poset = build_poset({n, n}, {}, engine);
        const MaximalElements top = maximal_elements(poset);
        const auto bottom = minimal_elements(poset);
        const bool chain = poset.is_chain() && poset.size() == n - 2;
        const bool max_ok = top.unique_maximum && isomorphic(poset.nodes()[top.indices[0]].representative(), cycle_graph(n));
        const Multigraph low = with_bridges(cycle_graph(3), n - 3);
        const bool min_ok = bottom.size() == 1 && poset.nodes()[bottom[0]].tutte == engine.tutte(low);
        std::ostringstream d;
        d << poset.size() << " classes, chain " << (poset.is_chain() ? "yes" : "no") << ", maximum "
          << (max_ok ? "C" + std::to_string(n) : "wrong") << ", minimum " << (min_ok ? describe(low) : "wrong");
        rep.instances.push_back({"(" + std::to_string(n) + "," + std::to_string(n) + ")", chain && max_ok && min_ok, d.str()});
    }
    return rep;
}

inline VerifyReport verify_class_maximum(const char* name, std::size_t extra, const VerifyParams& p, std::size_t lo,
                                         std::size_t hi, const std::function<Multigraph(int)>& predicted,
                                         const std::function<std::string(int)>& label, const TutteEngine& engine)
{
    VerifyReport rep{name, {}};
    for (std::size_t n : structural_range(p, lo, hi, 4, name)) {
        const TuttePoset poset = build_poset({n, n + extra}, {}, engine);
        const MaximalElements top = maximal_elements(poset);
        const Multigraph want = predicted(int(n));
        bool ok = top.unique_maximum;
        std::ostringstream d;
        d << poset.size() << " classes, " << top.indices.size() << " maximal";
        if (top.unique_maximum) {
            const PosetNode& node = poset.nodes()[top.indices[0]];
            const CanonKey key = canonical_key(want);
            const bool match = node.members.size() == 1 && node.members[0] == key;
            ok = ok && match;
            d << ", maximum " << describe(node.representative()) << (match ? " = " : " != ") << label(int(n));
        }
        rep.instances.push_back(
            {"(" + std::to_string(n) + "," + std::to_string(n + extra) + ")", ok, d.str()});
    }
    return rep;
}

// --- move theorems ---------------------------------------------------------

inline bool is_block(const Multigraph& g)
{
    if (g.vertex_count() == 2 && g.edge_count() == 1)
        return true;
    return g.is_simple() && g.vertex_count() >= 3 && g.is_connected() && block_decompose(g).size() == 1;
}

/// G = G1.G2 at v, H = G - uv + uw for u in G1 and w in G2 adjacent to v.
inline VerifyInstance comb_instance(std::mt19937_64& rng, const Multigraph& g1, Vertex v1, const Multigraph& g2,
                                    Vertex v2, const std::optional<Multigraph>& extra, bool randomize,
                                    const TutteEngine& engine)
{
    Multigraph g = join_at(g1, v1, g2, v2);
    // join_at keeps g1's labels and appends g2's other vertices.
    auto image = [&](Vertex w) { return w == v2 ? v1 : Vertex(g1.vertex_count() + (w < v2 ? w : w - 1)); };
    auto incident = [&](const Multigraph& b, Vertex v) {
        return randomize ? random_incident_edge(rng, b, v) : std::size_t(std::find_if(b.edges().begin(), b.edges().end(), [&](const Edge& e) {
                                                                                return e.u == v || e.v == v;
                                                                            }) - b.edges().begin());
    };
    const Vertex u = g1.edge(incident(g1, v1)).other(v1);
    const Vertex w = image(g2.edge(incident(g2, v2)).other(v2));
    if (extra)
        g = join_at(g, random_vertex(rng, g), *extra, 0);
    Multigraph h = delete_edge(g, Edge(u, v1));
    h.add_edge(u, w);
    const bool g1_bridge = g1.vertex_count() == 2;
    return check_move("G1 = " + describe(g1) + ", G2 = " + describe(g2), g, h,
                      g1_bridge ? Ordering::Equal : Ordering::Less, engine);
}

inline VerifyReport verify_comb_move(const VerifyParams& p, const TutteEngine& engine)
{
    if (!p.args.empty())
        throw DomainError("comb-move takes its blocks as graphs, not integers");
    VerifyReport rep{"comb-move", {}};
    std::mt19937_64 rng(p.seed);
    if (p.g1 || p.g2) {
        if (!p.g1 || !p.g2)
            throw DomainError("comb-move needs both blocks G1 and G2");
        if (!is_block(*p.g1) || !is_block(*p.g2))
            throw DomainError("comb-move blocks must be K2 or simple 2-connected graphs");
        rep.instances.push_back(comb_instance(rng, *p.g1, 0, *p.g2, 0, std::nullopt, false, engine));
        return rep;
    }
    for (std::size_t t = 0; t < p.instances; ++t) {
        // Every fourth instance uses G1 = K2, where the move must give Equal.
        const Multigraph g1 = t % 4 == 3 ? multiedge_graph(1) : random_block(rng, 9);
        const Multigraph g2 = t % 5 == 4 ? multiedge_graph(1) : random_block(rng, 9);
        const Vertex v1 = random_vertex(rng, g1), v2 = random_vertex(rng, g2);
        std::optional<Multigraph> extra;
        if (t % 3 == 0)
            extra = random_block(rng, 5);
        rep.instances.push_back(comb_instance(rng, g1, v1, g2, v2, extra, true, engine));
    }
    return rep;
}

inline VerifyReport verify_bridge_elim(const VerifyParams& p, const TutteEngine& engine)
{
    if (!p.args.empty())
        throw DomainError("bridge-elim draws its blocks at random; use --seed");
    VerifyReport rep{"bridge-elim", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < p.instances; ++t) {
        const Multigraph b = random_block(rng, 10);
        const Multigraph g = join_at(b, random_vertex(rng, b), multiedge_graph(1), 0);
        std::uniform_int_distribution<std::size_t> pick(0, b.edge_count() - 1);
        const Edge e = b.edge(pick(rng));
        Multigraph h = delete_edge(b, e);
        const Vertex mid = h.add_vertex();
        h.add_edge(e.u, mid);
        h.add_edge(mid, e.v);
        rep.instances.push_back(check_move("G = " + describe(b), g, h, Ordering::Less, engine));
    }
    return rep;
}

/// Base graph plus two parallel ears of lengths a and b between its vertices x,y.
inline Multigraph with_parallel_ears(const Multigraph& base, Vertex x, Vertex y, int a, int b)
{
    Multigraph g = base;
    add_ear(g, x, y, a);
    add_ear(g, x, y, b);
    return g;
}

inline VerifyReport verify_parallel_ear(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"parallel-ear", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < instance_count(p); ++t) {
        int a = 0, b = 0;
        Multigraph base(2);
        if (!p.args.empty()) {
            const auto v = need_args(p, 2, "parallel-ear");
            a = v[0];
            b = v[1];
            // two poles plus a third path of length 2 between them
            add_ear(base, 0, 1, 2);
        } else {
            std::uniform_int_distribution<int> la(3, 8);
            a = la(rng);
            std::uniform_int_distribution<int> lb(1, a - 2);
            b = lb(rng);
            // Random connected remainder that joins the poles 0 and 1 by a path of its own; otherwise
            // the two ears form a cycle block and the move leaves T unchanged.
            std::uniform_int_distribution<int> pole_path(1, 3);
            add_ear(base, 0, 1, pole_path(rng));
            std::uniform_int_distribution<int> extra(0, 3);
            for (int k = extra(rng); k > 0; --k) {
                const Vertex s = random_vertex(rng, base), e = random_vertex(rng, base);
                std::uniform_int_distribution<int> len(1, 3);
                if (s == e)
                    base = join_at(base, s, cycle_graph(std::size_t(len(rng) + 2)), 0);
                else
                    add_ear(base, s, e, len(rng));
            }
        }
        if (b < 1 || a - 1 <= b)
            throw DomainError("parallel-ear needs b >= 1 and a - 1 > b (got a=" + std::to_string(a) +
                              ", b=" + std::to_string(b) + ")");
        const Multigraph g = with_parallel_ears(base, 0, 1, a, b);
        const Multigraph h = with_parallel_ears(base, 0, 1, a - 1, b + 1);
        rep.instances.push_back(
            check_move("a=" + std::to_string(a) + " b=" + std::to_string(b), g, h, Ordering::Less, engine));
    }
    return rep;
}

inline VerifyReport verify_cycle_evening(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"cycle-evening", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < instance_count(p); ++t) {
        int a = 0, b = 0;
        if (!p.args.empty()) {
            const auto v = need_args(p, 2, "cycle-evening");
            a = v[0];
            b = v[1];
        } else {
            std::uniform_int_distribution<int> la(3, 14);
            a = la(rng);
            std::uniform_int_distribution<int> lb(1, a - 2);
            b = lb(rng);
        }
        if (b < 1 || a - 1 <= b)
            throw DomainError("cycle-evening needs b >= 1 and a - 1 > b (got a=" + std::to_string(a) +
                              ", b=" + std::to_string(b) + ")");
        const Multigraph g = build(join_spec({cycle_spec(a), cycle_spec(b)}));
        const Multigraph h = build(join_spec({cycle_spec(a - 1), cycle_spec(b + 1)}));
        rep.instances.push_back(
            check_move("a=" + std::to_string(a) + " b=" + std::to_string(b), g, h, Ordering::Less, engine));
    }
    return rep;
}

inline std::string list_text(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

inline VerifyReport verify_box_evening(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"box-evening", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < instance_count(p); ++t) {
        std::vector<int> v;
        bool first_move = t % 2 == 0;
        if (!p.args.empty()) {
            v = need_args(p, 6, "box-evening");
            const int a = v[0], b = v[1], e = v[4], f = v[5];
            if (*std::min_element(v.begin(), v.end()) < 1)
                throw DomainError("box ear lengths must be positive (got " + list_text(v) + ")");
            if (b + f - 1 > a + e && f > 1)
                first_move = true;
            else if (b - 1 > e && a > f)
                first_move = false;
            else
                throw DomainError("box-evening needs b + f - 1 > a + e, or b - 1 > e and a > f (got " +
                                  list_text(v) + ")");
        } else {
            std::uniform_int_distribution<int> len(1, 5);
            for (;;) {
                v.assign(6, 0);
                for (int& x : v)
                    x = len(rng);
                const int a = v[0], b = v[1], e = v[4], f = v[5];
                if (first_move ? (b + f - 1 > a + e && f > 1) : (b - 1 > e && a > f))
                    break;
            }
        }
        const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
        const Multigraph g = build(box_spec(a, b, c, d, e, f));
        const Multigraph h = first_move ? build(box_spec(a + 1, b, c, d, e, f - 1))
                                        : build(box_spec(a - 1, b - 1, c, d, e + 1, f + 1));
        rep.instances.push_back(check_move(std::string(first_move ? "b+f-1 > a+e" : "b-1 > e, a > f") + " B(" +
                                               list_text(v) + ")",
                                           g, h, Ordering::Less, engine));
    }
    return rep;
}

inline std::vector<int> random_lengths(std::mt19937_64& rng, std::size_t count, int hi)
{
    std::uniform_int_distribution<int> len(1, hi);
    std::vector<int> v(count);
    for (int& x : v)
        x = len(rng);
    return v;
}

inline VerifyReport verify_theta4_box(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"theta4-box", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < instance_count(p); ++t) {
        std::vector<int> v;
        if (!p.args.empty()) {
            v = need_args(p, 4, "theta4-box");
        } else {
            do
                v = random_lengths(rng, 4, 5);
            while (!is_simple_spec(theta_spec(v)));
            std::swap(v[0], *std::min_element(v.begin(), v.end()));
        }
        const int a = v[0], b = v[1], c = v[2], d = v[3];
        if (std::min({a, b, c, d}) < 1 || !is_simple_spec(theta_spec(v)) || a != *std::min_element(v.begin(), v.end()))
            throw DomainError("theta4-box needs a simple theta with a the minimum length (got " + list_text(v) + ")");
        rep.instances.push_back(check_move("theta(" + list_text(v) + ")", build(theta_spec(v)),
                                           build(box_spec(1, 1, b - 1, c - 1, a, d)), Ordering::Less, engine));
    }
    return rep;
}

inline VerifyReport verify_delta_box(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"delta-box", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < instance_count(p); ++t) {
        std::vector<int> v;
        if (!p.args.empty()) {
            v = need_args(p, 5, "delta-box");
        } else {
            do
                v = random_lengths(rng, 5, 5);
            while (!is_simple_spec(delta_spec(v[0], v[1], v[2], v[3], v[4])) || v[3] < std::max({v[0], v[1], v[2]}));
        }
        const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4];
        if (std::min({a, b, c, d, e}) < 1 || !is_simple_spec(delta_spec(a, b, c, d, e)) || d < std::max({a, b, c}))
            throw DomainError("delta-box needs a simple delta graph with d = max(a,b,c,d) (got " + list_text(v) + ")");
        rep.instances.push_back(check_move("delta(" + list_text(v) + ")", build(delta_spec(a, b, c, d, e)),
                                           build(box_spec(1, e, a, c, b, d - 1)), Ordering::Less, engine));
    }
    return rep;
}

inline VerifyReport verify_cylinder_box(const VerifyParams& p, const TutteEngine& engine)
{
    VerifyReport rep{"cylinder-box", {}};
    std::mt19937_64 rng(p.seed);
    for (std::size_t t = 0; t < instance_count(p); ++t) {
        std::vector<int> v;
        if (!p.args.empty()) {
            v = need_args(p, 6, "cylinder-box");
        } else {
            do
                v = random_lengths(rng, 6, 4);
            while (!is_simple_spec(cylinder_spec(v[0], v[1], v[2], v[3], v[4], v[5])) ||
                   v[3] < std::max({v[0], v[1], v[2]}));
        }
        const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5];
        if (std::min({a, b, c, d, e, f}) < 1 || !is_simple_spec(cylinder_spec(a, b, c, d, e, f)) ||
            d < std::max({a, b, c}))
            throw DomainError("cylinder-box needs a simple cylinder graph with d = max(a,b,c,d) (got " + list_text(v) +
                              ")");
        const Multigraph g = build(cylinder_spec(a, b, c, d, e, f));
        VerifyInstance inst = check_move("cyl(" + list_text(v) + ")", g, build(box_spec(1, e + f, a, c, b, d - 1)),
                                         Ordering::Less, engine);
        const bool same = engine.tutte(g) == engine.tutte(build(delta_spec(a, b, c, d, e + f)));
        inst.ok = inst.ok && same;
        inst.detail += same ? "; T equals T(delta(a,b,c,d,e+f))" : "; T differs from T(delta(a,b,c,d,e+f))";
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

using Verifier = std::function<VerifyReport(const VerifyParams&, const TutteEngine&)>;

inline const std::map<std::string, Verifier>& verifiers()
{
    static const std::map<std::string, Verifier> table{
        {"gnn-chain", verify_gnn_chain},
        {"theta-max",
         [](const VerifyParams& p, const TutteEngine& e) {
             return verify_class_maximum(
                 "theta-max", 1, p, 5, 9, [](int n) { return theta_star(n); },
                 [](int n) { return to_string(theta_star_spec(n)); }, e);
         }},
        {"box-max",
         [](const VerifyParams& p, const TutteEngine& e) {
             return verify_class_maximum(
                 "box-max", 2, p, 4, 8, [](int n) { return box_star(n); },
                 [](int n) { return to_string(box_star_spec(n)); }, e);
         }},
        {"comb-move", verify_comb_move},
        {"bridge-elim", verify_bridge_elim},
        {"parallel-ear", verify_parallel_ear},
        {"cycle-evening", verify_cycle_evening},
        {"box-evening", verify_box_evening},
        {"theta4-box", verify_theta4_box},
        {"delta-box", verify_delta_box},
        {"cylinder-box", verify_cylinder_box},
    };
    return table;
}

} // namespace detail

inline std::vector<std::string> theorem_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : detail::verifiers())
        out.push_back(name);
    return out;
}

/// Runs one named verification suite.
inline VerifyReport verify_theorem(const std::string& name, const VerifyParams& params = {},
                                   const TutteEngine& engine = default_engine())
{
    const auto& table = detail::verifiers();
    auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto& [n, fn] : table)
            known += (known.empty() ? "" : ", ") + n;
        throw DomainError("unknown theorem '" + name + "' (known: " + known + ")");
    }
    return it->second(params, engine);
}

/// Every suite in name order; `params.n` pins the structural suites to one class.
inline std::vector<VerifyReport> verify_all(const VerifyParams& params = {}, const TutteEngine& engine = default_engine())
{
    if (!params.args.empty() || params.g1 || params.g2)
        throw DomainError("verify all does not take explicit theorem parameters");
    std::vector<VerifyReport> out;
    for (const std::string& name : theorem_names())
        out.push_back(verify_theorem(name, params, engine));
    return out;
}

} // namespace tuttepo
