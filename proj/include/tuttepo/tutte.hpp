#pragma once

#include "tuttepo/bipoly.hpp"
#include "tuttepo/canon.hpp"
#include "tuttepo/errors.hpp"
#include "tuttepo/multigraph.hpp"

#include <atomic>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace tuttepo {

/// Isomorphism-aware memo of block Tutte polynomials. Safe for concurrent use;
/// inserting a key twice keeps the first value (both are equal by construction).
class TutteCache {
public:
    explicit TutteCache(std::size_t byte_cap = SIZE_MAX) : byte_cap_(byte_cap) {}

    std::optional<BiPoly> find(const CanonKey& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) {
            misses_.fetch_add(1, std::memory_order_relaxed);
            return std::nullopt;
        }
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
    }

    void insert(const CanonKey& key, const BiPoly& value)
    {
        const std::size_t cost = key.bytes.size() + 64 * value.term_count() + 64;
        std::unique_lock lock(mutex_);
        if (bytes_ + cost > byte_cap_)
            return;
        if (map_.try_emplace(key, value).second)
            bytes_ += cost;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }
    std::size_t approximate_bytes() const
    {
        std::shared_lock lock(mutex_);
        return bytes_;
    }
    std::uint64_t hits() const noexcept { return hits_.load(); }
    std::uint64_t misses() const noexcept { return misses_.load(); }

    void clear()
    {
        std::unique_lock lock(mutex_);
        map_.clear();
        bytes_ = 0;
    }

    /// Byte cap from TUTTE_CACHE_BYTES, unlimited when unset or unparsable.
    static std::size_t cap_from_environment()
    {
        const char* env = std::getenv("TUTTE_CACHE_BYTES");
        if (env == nullptr || *env == '\0')
            return SIZE_MAX;
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        return (end != nullptr && *end == '\0') ? std::size_t(v) : SIZE_MAX;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonKey, BiPoly, CanonKeyHash> map_;
    std::size_t byte_cap_;
    std::size_t bytes_ = 0;
    mutable std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

/// Edge picked for plain deletion-contraction when no closed form or ear applies.
enum class EdgeChoice {
    MaxDegreeSum, // lexicographically least edge of maximum endpoint-degree sum
    MinDegreeSum,
    First,
};

struct TutteOptions {
    bool ear_reduction = true;
    bool use_cache = true;
    EdgeChoice edge_choice = EdgeChoice::MaxDegreeSum;
};

/// T(C_n) = x^{n-1} + ... + x + y, with T(C_1) = y.
inline BiPoly cycle_tutte(std::size_t n)
{
    BiPoly t = BiPoly::y();
    for (std::uint32_t i = 1; i < n; ++i)
        t += BiPoly::x(i);
    return t;
}

/// T(M_m) = x + y + ... + y^{m-1}, with T(M_1) = x.
inline BiPoly multiedge_tutte(std::size_t m)
{
    BiPoly t = BiPoly::x();
    for (std::uint32_t j = 1; j < m; ++j)
        t += BiPoly::y(j);
    return t;
}

struct EarReduction {
    BiPoly coefficient; // 1 + x + ... + x^{k-1}
    Multigraph deleted;
    Multigraph contracted;
};

/// Splits T(g) = coefficient * T(deleted) + T(contracted) along an ear whose
/// edges are all non-bridges.
inline EarReduction ear_reduce(const Multigraph& g, const Ear& ear)
{
    if (ear.cycle || ear.ends.first == ear.ends.second)
        throw DomainError("ear reduction needs two distinct endpoints");
    if (ear.edges.empty())
        throw DomainError("empty ear");
    const auto classes = classify_edges(g);
    for (std::size_t i : ear.edges)
        if (classes.at(i) != EdgeClass::Ordinary)
            throw DomainError("ear contains a bridge or loop");

    Multigraph deleted = remove_edges_and_vertices(g, ear.edges, ear.internal);
    // Endpoint indices after removing internal vertices.
    auto shifted = [&](Vertex v) {
        Vertex s = v;
        for (Vertex w : ear.internal)
            if (w < v)
                --s;
        return s;
    };
    Multigraph contracted = identify_vertices(deleted, shifted(ear.ends.first), shifted(ear.ends.second));
    return {geometric_sum(true, int(ear.length())), std::move(deleted), std::move(contracted)};
}

/// Deletion-contraction Tutte engine with block factorization, closed forms
/// for cycles and multiedges, ear reduction and a shared memo.
class TutteEngine {
public:
    explicit TutteEngine(TutteOptions options = {}, std::shared_ptr<TutteCache> cache = nullptr)
        : options_(options), cache_(cache ? std::move(cache) : std::make_shared<TutteCache>())
    {
    }

    const TutteOptions& options() const noexcept { return options_; }
    TutteCache& cache() const noexcept { return *cache_; }

    /// Tutte polynomial of a connected multigraph; 1 for a single vertex.
    BiPoly tutte(const Multigraph& g) const
    {
        if (!g.is_connected())
            throw DomainError("tutte requires a connected graph");
        if (g.vertex_count() == 0)
            throw DomainError("tutte requires at least one vertex");
        return connected(g);
    }

    /// Product over connected components.
    BiPoly tutte_components(const Multigraph& g) const
    {
        auto [label, count] = g.components();
        BiPoly result = 1;
        for (std::uint32_t c = 0; c < count; ++c) {
            std::vector<Vertex> drop;
            std::vector<std::size_t> drop_edges;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (label[v] != c)
                    drop.push_back(v);
            for (std::size_t i = 0; i < g.edge_count(); ++i)
                if (label[g.edge(i).u] != c)
                    drop_edges.push_back(i);
            result *= connected(remove_edges_and_vertices(g, drop_edges, drop));
        }
        return result;
    }

private:
    BiPoly connected(const Multigraph& g) const
    {
        if (g.edge_count() == 0)
            return 1;
        // Deleting a non-bridge and contracting any edge keep the graph
        // connected; block_decompose_with_ids rejects anything else.
        BiPoly result = 1;
        for (const Block& b : block_decompose_with_ids(g))
            result *= block(b.graph);
        return result;
    }

    BiPoly block(const Multigraph& b) const
    {
        const std::size_t n = b.vertex_count();
        const std::size_t m = b.edge_count();
        if (n == 1)
            return BiPoly::y(std::uint32_t(m));
        if (n == 2)
            return multiedge_tutte(m);
        if (n == m)
            return cycle_tutte(n);

        const bool cacheable = options_.use_cache && n <= default_canon_bound;
        CanonKey key;
        if (cacheable) {
            key = canonical_key(b);
            if (auto hit = cache_->find(key))
                return *hit;
        }
        std::optional<BiPoly> reduced;
        if (options_.ear_reduction)
            reduced = reduce_by_ear(b);
        BiPoly result;
        if (reduced) {
            result = std::move(*reduced);
        } else {
            const std::size_t e = pick_edge(b);
            result = connected(delete_edge_at(b, e)) + connected(contract_edge_at(b, e));
        }
        if (cacheable)
            cache_->insert(key, result);
        return result;
    }

    // Reduces along the longest ear of length >= 2 in a 2-connected block.
    std::optional<BiPoly> reduce_by_ear(const Multigraph& b) const
    {
        const auto ears = find_ears(b);
        const Ear* best = nullptr;
        for (const Ear& e : ears)
            if (!e.cycle && e.length() >= 2 && (best == nullptr || e.length() > best->length()))
                best = &e;
        if (best == nullptr)
            return std::nullopt;
        EarReduction r = ear_reduce(b, *best);
        return r.coefficient * connected(r.deleted) + connected(r.contracted);
    }

    std::size_t pick_edge(const Multigraph& b) const
    {
        if (options_.edge_choice == EdgeChoice::First)
            return 0;
        const auto deg = b.degrees();
        std::size_t best = SIZE_MAX;
        std::size_t best_score = 0;
        for (std::size_t i = 0; i < b.edge_count(); ++i) {
            const Edge& e = b.edge(i);
            const std::size_t score = deg[e.u] + deg[e.v];
            bool better = false;
            if (best == SIZE_MAX)
                better = true;
            else if (score != best_score)
                better = options_.edge_choice == EdgeChoice::MaxDegreeSum ? score > best_score : score < best_score;
            else
                better = e < b.edge(best);
            if (better) {
                best = i;
                best_score = score;
            }
        }
        return best;
    }

    TutteOptions options_;
    std::shared_ptr<TutteCache> cache_;
};

/// Process-wide engine with default options; its cache honours TUTTE_CACHE_BYTES.
inline const TutteEngine& default_engine()
{
    static const TutteEngine engine(TutteOptions{}, std::make_shared<TutteCache>(TutteCache::cap_from_environment()));
    return engine;
}

inline BiPoly tutte(const Multigraph& g) { return default_engine().tutte(g); }

inline constexpr std::size_t oracle_edge_bound = 20;

/// Corank-nullity expansion over all 2^m edge subsets (any graph, connected or not).
inline BiPoly tutte_oracle(const Multigraph& g)
{
    const std::size_t m = g.edge_count();
    if (m > oracle_edge_bound)
        throw CapacityError("oracle limited to " + std::to_string(oracle_edge_bound) + " edges");
    const std::size_t n = g.vertex_count();
    const std::size_t full_rank = n - g.components().second;

    // counts[i][j]: subsets with rank deficit i and nullity j
    std::vector<std::vector<Integer>> counts(full_rank + 1, std::vector<Integer>(m + 1, 0));
    std::vector<std::uint32_t> parent(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::uint32_t a) {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        };
        std::size_t rank = 0, size = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1))
                continue;
            ++size;
            auto a = find(g.edge(i).u), b = find(g.edge(i).v);
            if (a != b) {
                parent[a] = b;
                ++rank;
            }
        }
        counts[full_rank - rank][size - rank] += 1;
    }

    const BiPoly xm1 = BiPoly::x() - BiPoly(1);
    const BiPoly ym1 = BiPoly::y() - BiPoly(1);
    std::vector<BiPoly> xpow{BiPoly(1)}, ypow{BiPoly(1)};
    for (std::size_t i = 1; i <= full_rank; ++i)
        xpow.push_back(xpow.back() * xm1);
    for (std::size_t j = 1; j <= m; ++j)
        ypow.push_back(ypow.back() * ym1);
    BiPoly t;
    for (std::size_t i = 0; i <= full_rank; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            if (counts[i][j] != 0)
                t += counts[i][j] * (xpow[i] * ypow[j]);
    return t;
}

} // namespace tuttepo
