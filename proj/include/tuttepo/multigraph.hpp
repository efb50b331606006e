#pragma once

#include "tuttepo/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tuttepo {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u <= v. A loop has u == v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool is_loop() const noexcept { return u == v; }
    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled multigraph: loops and parallel edges are allowed.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertex_count) : n_(vertex_count) {}
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges))
    {
        for (const Edge& e : edges_)
            if (e.v >= n_)
                throw DomainError("edge endpoint " + std::to_string(e.v) + " out of range for " +
                                  std::to_string(n_) + " vertices");
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    Vertex add_vertex() { return Vertex(n_++); }

    void add_edge(Vertex a, Vertex b)
    {
        if (a >= n_ || b >= n_)
            throw DomainError("edge endpoint out of range");
        edges_.emplace_back(a, b);
    }

    /// Degree with loops counted twice.
    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> d(n_, 0);
        for (const Edge& e : edges_) {
            ++d[e.u];
            ++d[e.v];
        }
        return d;
    }

    /// Incident edge indices per vertex; a loop is listed once at its vertex.
    std::vector<std::vector<std::size_t>> incidence() const
    {
        std::vector<std::vector<std::size_t>> inc(n_);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            inc[edges_[i].u].push_back(i);
            if (!edges_[i].is_loop())
                inc[edges_[i].v].push_back(i);
        }
        return inc;
    }

    std::size_t loop_count() const noexcept
    {
        return std::size_t(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
    }

    bool is_simple() const
    {
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i].is_loop())
                return false;
            if (i > 0 && sorted[i] == sorted[i - 1])
                return false;
        }
        return true;
    }

    /// Component label per vertex and the number of components.
    std::pair<std::vector<std::uint32_t>, std::size_t> components() const
    {
        std::vector<std::uint32_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t a) {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const Edge& e : edges_)
            parent[find(e.u)] = find(e.v);
        std::vector<std::uint32_t> label(n_, UINT32_MAX);
        std::vector<std::uint32_t> root_label(n_, UINT32_MAX);
        std::size_t count = 0;
        for (std::uint32_t v = 0; v < n_; ++v) {
            std::uint32_t r = find(v);
            if (root_label[r] == UINT32_MAX)
                root_label[r] = std::uint32_t(count++);
            label[v] = root_label[r];
        }
        return {label, count};
    }

    /// The empty graph (no vertices) counts as connected.
    bool is_connected() const { return n_ <= 1 || components().second == 1; }

    friend bool operator==(const Multigraph& a, const Multigraph& b)
    {
        if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size())
            return false;
        std::vector<Edge> ea = a.edges_, eb = b.edges_;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea == eb;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

enum class EdgeClass { Bridge, Loop, Ordinary };

inline const char* to_string(EdgeClass c)
{
    switch (c) {
    case EdgeClass::Bridge: return "Bridge";
    case EdgeClass::Loop: return "Loop";
    case EdgeClass::Ordinary: return "Ordinary";
    }
    return "?";
}

/// Index of one copy of `e` in `g`, throwing if absent.
inline std::size_t find_edge(const Multigraph& g, Edge e)
{
    const auto& es = g.edges();
    auto it = std::find(es.begin(), es.end(), e);
    if (it == es.end())
        throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
    return std::size_t(it - es.begin());
}

inline Multigraph delete_edge_at(const Multigraph& g, std::size_t index)
{
    if (index >= g.edge_count())
        throw DomainError("edge index out of range");
    std::vector<Edge> es = g.edges();
    es.erase(es.begin() + std::ptrdiff_t(index));
    return Multigraph(g.vertex_count(), std::move(es));
}

/// Removes one copy of `e`.
inline Multigraph delete_edge(const Multigraph& g, Edge e) { return delete_edge_at(g, find_edge(g, e)); }

/// Identifies vertex `hi` with `lo` (lo < hi), removing `hi` and shifting higher indices down.
inline Multigraph identify_vertices(const Multigraph& g, Vertex a, Vertex b)
{
    const Vertex lo = std::min(a, b), hi = std::max(a, b);
    if (lo == hi)
        return g;
    auto relabel = [&](Vertex w) -> Vertex {
        if (w == hi)
            return lo;
        return w > hi ? w - 1 : w;
    };
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        es.emplace_back(relabel(e.u), relabel(e.v));
    return Multigraph(g.vertex_count() - 1, std::move(es));
}

/// Contracts the edge at `index`: its endpoints merge, other parallel copies become loops.
inline Multigraph contract_edge_at(const Multigraph& g, std::size_t index)
{
    if (index >= g.edge_count())
        throw DomainError("edge index out of range");
    const Edge e = g.edge(index);
    if (e.is_loop())
        throw DomainError("cannot contract a loop");
    return identify_vertices(delete_edge_at(g, index), e.u, e.v);
}

inline Multigraph contract_edge(const Multigraph& g, Edge e) { return contract_edge_at(g, find_edge(g, e)); }

/// Removes the listed vertices (which must have no remaining incident edges
/// other than those in `drop_edges`) and the listed edges, compacting indices.
inline Multigraph remove_edges_and_vertices(const Multigraph& g, std::span<const std::size_t> drop_edges,
                                            std::span<const Vertex> drop_vertices)
{
    std::vector<bool> edge_gone(g.edge_count(), false);
    for (std::size_t i : drop_edges)
        edge_gone.at(i) = true;
    std::vector<bool> vertex_gone(g.vertex_count(), false);
    for (Vertex v : drop_vertices)
        vertex_gone.at(v) = true;
    std::vector<Vertex> map(g.vertex_count(), 0);
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        map[v] = vertex_gone[v] ? UINT32_MAX : next++;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (edge_gone[i])
            continue;
        const Edge& e = g.edge(i);
        if (vertex_gone[e.u] || vertex_gone[e.v])
            throw DomainError("removed vertex still has incident edges");
        es.emplace_back(map[e.u], map[e.v]);
    }
    return Multigraph(next, std::move(es));
}

/// Relabels vertex v as perm[v].
inline Multigraph permute(const Multigraph& g, std::span<const Vertex> perm)
{
    std::vector<Edge> es;
    es.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        es.emplace_back(perm[e.u], perm[e.v]);
    return Multigraph(g.vertex_count(), std::move(es));
}

/// Disjoint union followed by identifying vertex `at_b` of `b` with vertex `at_a` of `a`.
inline Multigraph join_at(const Multigraph& a, Vertex at_a, const Multigraph& b, Vertex at_b)
{
    if (at_a >= a.vertex_count() || at_b >= b.vertex_count())
        throw DomainError("join vertex out of range");
    const auto offset = Vertex(a.vertex_count());
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges())
        es.emplace_back(e.u + offset, e.v + offset);
    Multigraph u(a.vertex_count() + b.vertex_count(), std::move(es));
    return identify_vertices(u, at_a, at_b + offset);
}

/// Complement of a simple graph.
inline Multigraph complement(const Multigraph& g)
{
    if (!g.is_simple())
        throw DomainError("complement requires a simple graph");
    const std::size_t n = g.vertex_count();
    std::vector<bool> adj(n * n, false);
    for (const Edge& e : g.edges())
        adj[e.u * n + e.v] = true;
    Multigraph c(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!adj[u * n + v])
                c.add_edge(u, v);
    return c;
}

namespace detail {

// Iterative low-link DFS over edge ids. Parallel edges are distinguished by
// id, so a doubled edge is never a bridge. Loops are skipped.
struct LowLink {
    std::vector<std::uint32_t> disc, low;
    std::vector<bool> is_bridge;
    std::vector<std::vector<std::size_t>> blocks; // edge ids per biconnected component

    explicit LowLink(const Multigraph& g)
    {
        const std::size_t n = g.vertex_count();
        const auto inc = g.incidence();
        disc.assign(n, 0);
        low.assign(n, 0);
        is_bridge.assign(g.edge_count(), false);
        std::uint32_t timer = 0;
        std::vector<std::size_t> edge_stack;

        struct Frame {
            Vertex v;
            std::size_t parent_edge;
            std::size_t next;
        };
        for (Vertex root = 0; root < n; ++root) {
            if (disc[root] != 0)
                continue;
            std::vector<Frame> stack{{root, SIZE_MAX, 0}};
            disc[root] = low[root] = ++timer;
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.next < inc[f.v].size()) {
                    const std::size_t ei = inc[f.v][f.next++];
                    const Edge& e = g.edge(ei);
                    if (e.is_loop() || ei == f.parent_edge)
                        continue;
                    const Vertex w = e.other(f.v);
                    if (disc[w] == 0) {
                        edge_stack.push_back(ei);
                        disc[w] = low[w] = ++timer;
                        stack.push_back({w, ei, 0});
                    } else if (disc[w] < disc[f.v]) {
                        edge_stack.push_back(ei);
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                    continue;
                }
                const Vertex v = f.v;
                const std::size_t pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty())
                    break;
                const Vertex parent = stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] > disc[parent])
                    is_bridge[pe] = true;
                if (low[v] >= disc[parent]) {
                    std::vector<std::size_t> block;
                    while (true) {
                        const std::size_t top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == pe)
                            break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
};

} // namespace detail

/// Bridge / Loop / Ordinary label for every edge, indexed like `g.edges()`.
inline std::vector<EdgeClass> classify_edges(const Multigraph& g)
{
    detail::LowLink ll(g);
    std::vector<EdgeClass> out(g.edge_count(), EdgeClass::Ordinary);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (g.edge(i).is_loop())
            out[i] = EdgeClass::Loop;
        else if (ll.is_bridge[i])
            out[i] = EdgeClass::Bridge;
    }
    return out;
}

/// A block together with the indices of the parent graph's edges it contains.
struct Block {
    Multigraph graph;
    std::vector<std::size_t> edge_ids;
};

/// Blocks of a connected multigraph, each as a standalone graph. Bridges are
/// K2 blocks and each loop is its own one-vertex block. An edgeless single
/// vertex has no blocks.
inline std::vector<Block> block_decompose_with_ids(const Multigraph& g)
{
    if (!g.is_connected())
        throw DomainError("block decomposition requires a connected graph");
    detail::LowLink ll(g);
    std::vector<std::vector<std::size_t>> groups = std::move(ll.blocks);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (g.edge(i).is_loop())
            groups.push_back({i});
    std::vector<Block> out;
    out.reserve(groups.size());
    std::vector<Vertex> map(g.vertex_count(), UINT32_MAX);
    for (auto& ids : groups) {
        std::sort(ids.begin(), ids.end());
        std::vector<Vertex> verts;
        for (std::size_t i : ids) {
            verts.push_back(g.edge(i).u);
            verts.push_back(g.edge(i).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (std::size_t k = 0; k < verts.size(); ++k)
            map[verts[k]] = Vertex(k);
        std::vector<Edge> es;
        es.reserve(ids.size());
        for (std::size_t i : ids)
            es.emplace_back(map[g.edge(i).u], map[g.edge(i).v]);
        out.push_back({Multigraph(verts.size(), std::move(es)), std::move(ids)});
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.edge_ids < b.edge_ids; });
    return out;
}

inline std::vector<Multigraph> block_decompose(const Multigraph& g)
{
    std::vector<Multigraph> out;
    for (auto& b : block_decompose_with_ids(g))
        out.push_back(std::move(b.graph));
    return out;
}

/// Maximal chain of edges whose internal vertices have degree 2 and no loops.
///
/// Open chains run between two vertices of degree other than 2. A chain that
/// leaves and returns to the same vertex is reported with its final edge held
/// back, so its endpoints stay distinct; the held-back edge is reported as its
/// own 1-chain. A whole cycle component (no vertex of degree != 2) is reported
/// once with `cycle` set and both endpoints equal to its least vertex.
struct Ear {
    std::vector<std::size_t> edges; // edge indices in path order from `ends.first`
    std::vector<Vertex> internal;   // internal vertices in path order
    std::pair<Vertex, Vertex> ends;
    bool cycle = false;

    std::size_t length() const noexcept { return edges.size(); }
};

inline std::vector<Ear> find_ears(const Multigraph& g)
{
    const auto deg = g.degrees();
    const auto inc = g.incidence();
    std::vector<bool> has_loop(g.vertex_count(), false);
    for (const Edge& e : g.edges())
        if (e.is_loop())
            has_loop[e.u] = true;
    auto internal_ok = [&](Vertex v) { return deg[v] == 2 && !has_loop[v]; };

    std::vector<bool> used(g.edge_count(), false);
    std::vector<Ear> ears;

    auto walk = [&](Vertex start, std::size_t first_edge) {
        Ear ear;
        ear.ends.first = start;
        Vertex cur = start;
        std::size_t ei = first_edge;
        while (true) {
            used[ei] = true;
            ear.edges.push_back(ei);
            const Vertex next = g.edge(ei).other(cur);
            if (!internal_ok(next) || next == start) {
                ear.ends.second = next;
                break;
            }
            ear.internal.push_back(next);
            const auto& nb = inc[next];
            const std::size_t cont = nb[0] == ei ? nb[1] : nb[0];
            cur = next;
            ei = cont;
        }
        return ear;
    };

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (internal_ok(v))
            continue;
        for (std::size_t ei : inc[v]) {
            if (used[ei] || g.edge(ei).is_loop())
                continue;
            Ear ear = walk(v, ei);
            if (ear.ends.first == ear.ends.second) {
                // Closed chain at a single vertex: split off the last edge.
                Ear tail;
                tail.edges.push_back(ear.edges.back());
                tail.ends = {ear.internal.back(), ear.ends.first};
                ear.edges.pop_back();
                ear.ends.second = ear.internal.back();
                ear.internal.pop_back();
                ears.push_back(std::move(ear));
                ears.push_back(std::move(tail));
            } else {
                ears.push_back(std::move(ear));
            }
        }
    }
    // Remaining unused non-loop edges lie on cycle components.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (used[i] || g.edge(i).is_loop())
            continue;
        const Vertex start = g.edge(i).u;
        Ear ear = walk(start, i);
        ear.cycle = true;
        ear.ends = {start, start};
        // walk() records the return to start as an end, not an internal vertex
        ears.push_back(std::move(ear));
    }
    return ears;
}

/// Path with `edges` edges on edges+1 vertices, numbered along the path.
inline Multigraph path_graph(std::size_t edges)
{
    Multigraph g(edges + 1);
    for (Vertex i = 0; i < edges; ++i)
        g.add_edge(i, i + 1);
    return g;
}

/// Cycle C_n: a loop for n = 1, a doubled edge for n = 2.
inline Multigraph cycle_graph(std::size_t n)
{
    if (n == 0)
        throw DomainError("cycle length must be positive");
    Multigraph g(n);
    for (Vertex i = 0; i < n; ++i)
        g.add_edge(i, Vertex((i + 1) % n));
    return g;
}

/// Two vertices joined by m parallel edges (K2 for m = 1).
inline Multigraph multiedge_graph(std::size_t m)
{
    if (m == 0)
        throw DomainError("multiedge multiplicity must be positive");
    Multigraph g(2);
    for (std::size_t i = 0; i < m; ++i)
        g.add_edge(0, 1);
    return g;
}

inline Multigraph complete_graph(std::size_t n)
{
    Multigraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

/// Text rendering "n m: u-v u-v ...", used in diagnostics.
inline std::string to_edge_string(const Multigraph& g)
{
    std::string s = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + ":";
    for (const Edge& e : g.edges())
        s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s;
}

} // namespace tuttepo
