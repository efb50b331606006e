#pragma once

#include "tuttepo/canon.hpp"
#include "tuttepo/errors.hpp"
#include "tuttepo/multigraph.hpp"
#include "tuttepo/parallel.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tuttepo {

/// The class of connected simple graphs with n vertices and m edges.
struct ClassSpec {
    std::size_t n = 1;
    std::size_t m = 0;

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

inline std::string to_string(const ClassSpec& s) { return "(" + std::to_string(s.n) + "," + std::to_string(s.m) + ")"; }

/// Size limits for enumeration. `m <= n + max_excess` is enforced only when
/// `n > unbounded_below`; smaller classes may use any edge count.
struct EnumeratorCaps {
    std::size_t max_n = 9;
    std::size_t max_excess = 4;
    std::size_t unbounded_below = 7;
};

inline void check_caps(const ClassSpec& spec, const EnumeratorCaps& caps = {})
{
    if (spec.n == 0)
        throw DomainError("class needs at least one vertex");
    if (spec.n > caps.max_n)
        throw CapacityError("enumeration cap: n = " + std::to_string(spec.n) + " > " + std::to_string(caps.max_n));
    if (spec.n > caps.unbounded_below && spec.m > spec.n + caps.max_excess)
        throw CapacityError("enumeration cap: m = " + std::to_string(spec.m) + " > n + " +
                            std::to_string(caps.max_excess) + " for n = " + std::to_string(spec.n));
}

namespace detail {

using Level = std::unordered_map<CanonKey, Multigraph, CanonKeyHash>;

/// Canonical children of every graph in `parents`, merged into one level.
template <class Children>
Level expand(const std::vector<Multigraph>& parents, Children&& children)
{
    std::vector<std::vector<Canonical>> found(parents.size());
    parallel_for(parents.size(), [&](std::size_t i) {
        for (const Multigraph& c : children(parents[i]))
            found[i].push_back(canonicalize(c));
    });
    Level level;
    for (auto& batch : found)
        for (auto& c : batch)
            level.try_emplace(std::move(c.key), std::move(c.form));
    return level;
}

inline std::vector<Multigraph> values_of(Level& level)
{
    std::vector<Multigraph> out;
    out.reserve(level.size());
    for (auto& [k, g] : level)
        out.push_back(std::move(g));
    return out;
}

inline std::vector<Multigraph> trees(std::size_t n)
{
    std::vector<Multigraph> current{Multigraph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        Level next = expand(current, [](const Multigraph& t) {
            std::vector<Multigraph> out;
            for (Vertex v = 0; v < t.vertex_count(); ++v) {
                Multigraph c = t;
                c.add_edge(v, c.add_vertex());
                out.push_back(std::move(c));
            }
            return out;
        });
        current = values_of(next);
    }
    return current;
}

inline std::vector<Multigraph> add_one_edge(const Multigraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<char> present(n * n, 0);
    for (const Edge& e : g.edges())
        present[e.u * n + e.v] = 1;
    std::vector<Multigraph> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!present[u * n + v]) {
                Multigraph c = g;
                c.add_edge(u, v);
                out.push_back(std::move(c));
            }
    return out;
}

} // namespace detail

/// One representative per isomorphism class of connected simple graphs in
/// `spec`, each in canonical form, sorted by CanonKey.
///
/// Classes are grown from the trees on n vertices one edge at a time;
/// every connected graph with m > n-1 edges arises from one with m-1 by
/// adding an edge (drop any edge on a cycle).
inline std::vector<Multigraph> enumerate_connected(const ClassSpec& spec, const EnumeratorCaps& caps = {})
{
    check_caps(spec, caps);
    const std::size_t n = spec.n;
    if (spec.m + 1 < n || spec.m > n * (n - 1) / 2)
        return {};
    std::vector<Multigraph> current = detail::trees(n);
    for (std::size_t m = n; m <= spec.m; ++m) {
        detail::Level next = detail::expand(current, detail::add_one_edge);
        current = detail::values_of(next);
    }
    std::vector<std::pair<CanonKey, Multigraph>> keyed;
    keyed.reserve(current.size());
    for (Multigraph& g : current)
        keyed.emplace_back(canonical_key(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Multigraph> out;
    out.reserve(keyed.size());
    for (auto& [k, g] : keyed)
        out.push_back(std::move(g));
    return out;
}

inline std::size_t count_connected(const ClassSpec& spec, const EnumeratorCaps& caps = {})
{
    return enumerate_connected(spec, caps).size();
}

} // namespace tuttepo
