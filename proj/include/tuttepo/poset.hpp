#pragma once

#include "tuttepo/bipoly.hpp"
#include "tuttepo/canon.hpp"
#include "tuttepo/enumerator.hpp"
#include "tuttepo/errors.hpp"
#include "tuttepo/multigraph.hpp"
#include "tuttepo/parallel.hpp"
#include "tuttepo/tutte.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tuttepo {

enum class Ordering { Less, Equal, Greater, Incomparable };

inline const char* to_string(Ordering o)
{
    switch (o) {
    case Ordering::Less:
        return "Less";
    case Ordering::Equal:
        return "Equal";
    case Ordering::Greater:
        return "Greater";
    case Ordering::Incomparable:
        return "Incomparable";
    }
    return "?";
}

enum class IncomparableCause { None, NoQuotient, MixedSigns };

inline const char* to_string(IncomparableCause c)
{
    switch (c) {
    case IncomparableCause::None:
        return "none";
    case IncomparableCause::NoQuotient:
        return "difference not divisible by x + y - xy";
    case IncomparableCause::MixedSigns:
        return "quotient has mixed signs";
    }
    return "?";
}

/// Outcome of comparing G with H. For Less the witness P satisfies
/// T(H) - T(G) = (x + y - xy) P; for Greater, T(G) - T(H) = (x + y - xy) P.
/// Either way P is nonzero with non-negative coefficients.
struct CompareResult {
    Ordering ordering = Ordering::Incomparable;
    std::optional<BiPoly> witness;
    IncomparableCause cause = IncomparableCause::None;
};

inline CompareResult compare_tutte(const BiPoly& tg, const BiPoly& th)
{
    const BiPoly d = th - tg;
    if (d.is_zero())
        return {Ordering::Equal, BiPoly{}, IncomparableCause::None};
    auto q = quotient_by_connector(d);
    if (!q)
        return {Ordering::Incomparable, std::nullopt, IncomparableCause::NoQuotient};
    if (q->all_coefficients_nonnegative())
        return {Ordering::Less, std::move(q), IncomparableCause::None};
    if (q->all_coefficients_nonpositive())
        return {Ordering::Greater, -*q, IncomparableCause::None};
    return {Ordering::Incomparable, std::nullopt, IncomparableCause::MixedSigns};
}

inline CompareResult compare(const Multigraph& g, const Multigraph& h, const TutteEngine& engine = default_engine())
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        throw DomainError("compare needs graphs from one class: (" + std::to_string(g.vertex_count()) + "," +
                          std::to_string(g.edge_count()) + ") vs (" + std::to_string(h.vertex_count()) + "," +
                          std::to_string(h.edge_count()) + ")");
    return compare_tutte(engine.tutte(g), engine.tutte(h));
}

/// One T-equivalence class. Members are canonical forms sorted by CanonKey;
/// the representative is the first of them.
struct PosetNode {
    BiPoly tutte;
    std::vector<CanonKey> members;
    std::vector<Multigraph> member_graphs;

    const Multigraph& representative() const { return member_graphs.front(); }
};

struct ComparisonStats {
    std::size_t attempted = 0;
    std::size_t skipped_equal_trees = 0;
    std::size_t no_quotient = 0;
    std::size_t mixed_signs = 0;
};

class TuttePoset {
public:
    TuttePoset() = default;
    TuttePoset(ClassSpec spec, std::vector<PosetNode> nodes) : spec_(spec), nodes_(std::move(nodes))
    {
        words_ = (nodes_.size() + 63) / 64;
        below_.assign(nodes_.size() * words_, 0);
        above_.assign(nodes_.size() * words_, 0);
    }

    const ClassSpec& spec() const noexcept { return spec_; }
    const std::vector<PosetNode>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& cover_edges() const noexcept { return covers_; }
    const ComparisonStats& stats() const noexcept { return stats_; }

    /// Strict relation between node i and node j.
    bool less(std::size_t i, std::size_t j) const { return below_[j * words_ + i / 64] >> (i % 64) & 1; }

    bool comparable(std::size_t i, std::size_t j) const { return i == j || less(i, j) || less(j, i); }

    bool is_chain() const
    {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (!comparable(i, j))
                    return false;
        return true;
    }

    std::optional<std::size_t> find(const BiPoly& t) const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (nodes_[i].tutte == t)
                return i;
        return std::nullopt;
    }

    void set_less(std::size_t i, std::size_t j)
    {
        below_[j * words_ + i / 64] |= std::uint64_t(1) << (i % 64);
        above_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
    }

    /// Recomputes cover edges as the transitive reduction of the relation.
    void reduce()
    {
        covers_.clear();
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                if (!less(i, j))
                    continue;
                bool between = false;
                for (std::size_t w = 0; w < words_ && !between; ++w)
                    between = (above_[i * words_ + w] & below_[j * words_ + w]) != 0;
                if (!between)
                    covers_.emplace_back(i, j);
            }
    }

    ComparisonStats& mutable_stats() noexcept { return stats_; }

private:
    ClassSpec spec_;
    std::vector<PosetNode> nodes_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> below_; // row j: nodes strictly below j
    std::vector<std::uint64_t> above_; // row i: nodes strictly above i
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    ComparisonStats stats_;
};

/// Groups graphs into T-equivalence classes, ordered by canonical rendering.
inline std::vector<PosetNode> tutte_classes(const std::vector<Multigraph>& graphs,
                                            const TutteEngine& engine = default_engine())
{
    std::vector<BiPoly> polys(graphs.size());
    std::vector<CanonKey> keys(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        polys[i] = engine.tutte(graphs[i]);
        keys[i] = canonical_key(graphs[i]);
    });
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        groups[polys[i].to_string()].push_back(i);
    std::vector<PosetNode> nodes;
    for (auto& [text, idx] : groups) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
        PosetNode node;
        node.tutte = polys[idx.front()];
        for (std::size_t i : idx) {
            node.members.push_back(keys[i]);
            node.member_graphs.push_back(graphs[i]);
        }
        nodes.push_back(std::move(node));
    }
    return nodes;
}

/// Poset on the classes of arbitrary same-class graphs.
inline TuttePoset poset_of(ClassSpec spec, std::vector<PosetNode> nodes)
{
    TuttePoset p(spec, std::move(nodes));
    const std::size_t k = p.size();
    std::vector<Integer> trees(k);
    for (std::size_t i = 0; i < k; ++i)
        trees[i] = p.nodes()[i].tutte.evaluate(Integer(1), Integer(1));

    // G < H forces T(H)(1,1) - T(G)(1,1) = P(1,1) > 0, so only pairs with
    // strictly fewer spanning trees on the lower side need the division.
    std::vector<std::vector<std::size_t>> ups(k);
    std::vector<ComparisonStats> local(k);
    parallel_for(k, [&](std::size_t i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            if (trees[i] == trees[j]) {
                if (i < j)
                    ++local[i].skipped_equal_trees;
                continue;
            }
            if (trees[i] > trees[j])
                continue;
            ++local[i].attempted;
            const CompareResult r = compare_tutte(p.nodes()[i].tutte, p.nodes()[j].tutte);
            if (r.ordering == Ordering::Less)
                ups[i].push_back(j);
            else if (r.cause == IncomparableCause::NoQuotient)
                ++local[i].no_quotient;
            else if (r.cause == IncomparableCause::MixedSigns)
                ++local[i].mixed_signs;
        }
    });
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j : ups[i])
            p.set_less(i, j);
        auto& s = p.mutable_stats();
        s.attempted += local[i].attempted;
        s.skipped_equal_trees += local[i].skipped_equal_trees;
        s.no_quotient += local[i].no_quotient;
        s.mixed_signs += local[i].mixed_signs;
    }
    p.reduce();
    return p;
}

inline TuttePoset build_poset(const ClassSpec& spec, const EnumeratorCaps& caps = {},
                              const TutteEngine& engine = default_engine())
{
    return poset_of(spec, tutte_classes(enumerate_connected(spec, caps), engine));
}

struct MaximalElements {
    std::vector<std::size_t> indices;
    bool unique_maximum = false;
};

inline MaximalElements maximal_elements(const TuttePoset& p)
{
    MaximalElements out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool has_upper = false;
        for (std::size_t j = 0; j < p.size() && !has_upper; ++j)
            has_upper = p.less(i, j);
        if (!has_upper)
            out.indices.push_back(i);
    }
    if (out.indices.size() == 1) {
        const std::size_t top = out.indices.front();
        out.unique_maximum = true;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (j != top && !p.less(j, top))
                out.unique_maximum = false;
    }
    return out;
}

inline std::vector<std::size_t> minimal_elements(const TuttePoset& p)
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        bool has_lower = false;
        for (std::size_t i = 0; i < p.size() && !has_lower; ++i)
            has_lower = p.less(i, j);
        if (!has_lower)
            out.push_back(j);
    }
    return out;
}

} // namespace tuttepo
