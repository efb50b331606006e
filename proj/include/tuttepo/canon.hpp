#pragma once

#include "tuttepo/errors.hpp"
#include "tuttepo/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tuttepo {

/// Byte string identifying the isomorphism class of a multigraph (loops and
/// edge multiplicities included).
struct CanonKey {
    std::string bytes;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};

inline constexpr std::size_t default_canon_bound = 12;

namespace detail {

class Canonizer {
public:
    Canonizer(const Multigraph& g) : n_(g.vertex_count()), adj_(n_ * n_, 0)
    {
        for (const Edge& e : g.edges()) {
            ++adj_[e.u * n_ + e.v];
            if (!e.is_loop())
                ++adj_[e.v * n_ + e.u];
        }
    }

    /// position[v] = canonical index of v.
    std::vector<Vertex> run()
    {
        if (n_ == 0)
            return {};
        Cells root{std::vector<Vertex>(n_)};
        for (Vertex v = 0; v < n_; ++v)
            root[0][v] = v;
        refine(root);
        std::vector<Vertex> prefix;
        search(root, prefix);
        return best_position_;
    }

    std::string certificate(const std::vector<Vertex>& position) const
    {
        std::vector<Vertex> at(n_);
        for (Vertex v = 0; v < n_; ++v)
            at[position[v]] = v;
        std::string out;
        put(out, std::uint32_t(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j)
                put(out, adj_[at[i] * n_ + at[j]]);
        return out;
    }

private:
    using Cells = std::vector<std::vector<Vertex>>;

    static void put(std::string& out, std::uint32_t value)
    {
        do {
            unsigned char byte = value & 0x7f;
            value >>= 7;
            if (value != 0)
                byte |= 0x80;
            out.push_back(char(byte));
        } while (value != 0);
    }

    // Splits cells by (loop multiplicity, edge multiplicity into each cell)
    // until stable. Sub-cells are ordered by signature so the result depends
    // only on the ordered input partition, not on vertex labels.
    void refine(Cells& cells) const
    {
        std::vector<std::uint32_t> color(n_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (Vertex v : cells[c])
                    color[v] = std::uint32_t(c);
            Cells next;
            next.reserve(n_);
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> sig;
                sig.reserve(cell.size());
                for (Vertex v : cell) {
                    std::vector<std::uint32_t> s(cells.size() + 1, 0);
                    s[0] = adj_[v * n_ + v];
                    for (Vertex w = 0; w < n_; ++w)
                        if (w != v)
                            s[color[w] + 1] += adj_[v * n_ + w];
                    sig.emplace_back(std::move(s), v);
                }
                std::sort(sig.begin(), sig.end());
                std::size_t start = next.size();
                next.push_back({sig[0].second});
                for (std::size_t i = 1; i < sig.size(); ++i) {
                    if (sig[i].first != sig[i - 1].first)
                        next.push_back({});
                    next.back().push_back(sig[i].second);
                }
                if (next.size() - start > 1)
                    changed = true;
            }
            cells = std::move(next);
        }
    }

    void search(const Cells& cells, std::vector<Vertex>& prefix)
    {
        std::size_t target = SIZE_MAX;
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == SIZE_MAX || cells[c].size() < cells[target].size()))
                target = c;
        if (target == SIZE_MAX) {
            leaf(cells);
            return;
        }
        std::vector<Vertex> explored;
        for (Vertex w : cells[target]) {
            if (!explored.empty() && in_explored_orbit(w, explored, prefix))
                continue;
            explored.push_back(w);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({w});
                std::vector<Vertex> rest;
                for (Vertex u : cells[c])
                    if (u != w)
                        rest.push_back(u);
                child.push_back(std::move(rest));
            }
            refine(child);
            prefix.push_back(w);
            search(child, prefix);
            prefix.pop_back();
        }
    }

    // Orbit test under the subgroup generated by known automorphisms that fix
    // the current prefix pointwise.
    bool in_explored_orbit(Vertex w, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const
    {
        std::vector<Vertex> parent(n_);
        for (Vertex v = 0; v < n_; ++v)
            parent[v] = v;
        auto find = [&](Vertex a) {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        };
        bool any = false;
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex s) { return gamma[s] == s; });
            if (!fixes)
                continue;
            any = true;
            for (Vertex v = 0; v < n_; ++v)
                parent[find(v)] = find(gamma[v]);
        }
        if (!any)
            return false;
        const Vertex rw = find(w);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == rw; });
    }

    void leaf(const Cells& cells)
    {
        std::vector<Vertex> position(n_);
        for (std::size_t c = 0; c < cells.size(); ++c)
            position[cells[c][0]] = Vertex(c);
        std::string cert = certificate(position);
        if (first_position_.empty()) {
            first_position_ = best_position_ = position;
            first_cert_ = best_cert_ = std::move(cert);
            return;
        }
        if (cert == first_cert_) {
            record_automorphism(first_position_, position);
        } else if (cert == best_cert_) {
            record_automorphism(best_position_, position);
        } else if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_position_ = position;
        }
    }

    void record_automorphism(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
    {
        if (automorphisms_.size() >= max_generators)
            return;
        std::vector<Vertex> at_a(n_);
        for (Vertex v = 0; v < n_; ++v)
            at_a[a[v]] = v;
        std::vector<Vertex> gamma(n_);
        for (Vertex v = 0; v < n_; ++v)
            gamma[v] = at_a[b[v]];
        automorphisms_.push_back(std::move(gamma));
    }

    static constexpr std::size_t max_generators = 64;

    std::size_t n_;
    std::vector<std::uint32_t> adj_;
    std::vector<Vertex> first_position_, best_position_;
    std::string first_cert_, best_cert_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

inline void check_canon_bound(const Multigraph& g, std::size_t bound)
{
    if (g.vertex_count() > bound)
        throw CapacityError("canonical labeling bound exceeded: " + std::to_string(g.vertex_count()) +
                            " vertices > " + std::to_string(bound));
}

} // namespace detail

/// Canonical position of every vertex: isomorphic graphs relabeled by their
/// canonical labelings become identical.
inline std::vector<Vertex> canonical_labeling(const Multigraph& g, std::size_t bound = default_canon_bound)
{
    detail::check_canon_bound(g, bound);
    return detail::Canonizer(g).run();
}

inline CanonKey canonical_key(const Multigraph& g, std::size_t bound = default_canon_bound)
{
    detail::check_canon_bound(g, bound);
    detail::Canonizer c(g);
    return CanonKey{c.certificate(c.run())};
}

/// `g` relabeled canonically, with edges sorted.
inline Multigraph canonical_form(const Multigraph& g, std::size_t bound = default_canon_bound)
{
    const auto pos = canonical_labeling(g, bound);
    Multigraph h = permute(g, pos);
    std::vector<Edge> es = h.edges();
    std::sort(es.begin(), es.end());
    return Multigraph(g.vertex_count(), std::move(es));
}

struct Canonical {
    CanonKey key;
    Multigraph form;
};

/// Key and canonical form from a single labeling run.
inline Canonical canonicalize(const Multigraph& g, std::size_t bound = default_canon_bound)
{
    detail::check_canon_bound(g, bound);
    detail::Canonizer c(g);
    const auto pos = c.run();
    Multigraph h = permute(g, pos);
    std::vector<Edge> es = h.edges();
    std::sort(es.begin(), es.end());
    return {CanonKey{c.certificate(pos)}, Multigraph(g.vertex_count(), std::move(es))};
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b, std::size_t bound = default_canon_bound)
{
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_key(a, bound) == canonical_key(b, bound);
}

} // namespace tuttepo
