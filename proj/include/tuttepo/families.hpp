#pragma once

#include "tuttepo/errors.hpp"
#include "tuttepo/multigraph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tuttepo {

// Leaves of a family expression. Ear lengths count edges.
struct CycleSpec {
    int n;
};
struct MultiedgeSpec {
    int m;
};
struct PathSpec {
    int k;
};
/// Two poles joined by internally disjoint paths of the given lengths.
struct ThetaSpec {
    std::vector<int> lengths;
};
/// Vertices x,y,z: ear e on (x,y); parallel ears a,b on (x,z) and c,d on (y,z).
struct DeltaSpec {
    std::array<int, 5> p; // a b c d e
};
/// Vertices u,v,x,y: ears a..f on (u,v),(x,y),(u,x),(v,y),(v,x),(u,y).
struct BoxSpec {
    std::array<int, 6> p;
};
/// Vertices u,v,x,y: ears e on (u,v), f on (x,y), parallel a,b on (u,x) and c,d on (v,y).
struct CylinderSpec {
    std::array<int, 6> p;
};

struct FamilySpec;

/// Parts glued at a common cutvertex (vertex 0 of each part).
struct JoinSpec {
    std::vector<FamilySpec> parts;
};

struct FamilySpec {
    std::variant<CycleSpec, MultiedgeSpec, PathSpec, ThetaSpec, DeltaSpec, BoxSpec, CylinderSpec, JoinSpec> node;
};

inline FamilySpec cycle_spec(int n) { return {CycleSpec{n}}; }
inline FamilySpec multiedge_spec(int m) { return {MultiedgeSpec{m}}; }
inline FamilySpec theta_spec(std::vector<int> lengths) { return {ThetaSpec{std::move(lengths)}}; }
inline FamilySpec delta_spec(int a, int b, int c, int d, int e) { return {DeltaSpec{{a, b, c, d, e}}}; }
inline FamilySpec box_spec(int a, int b, int c, int d, int e, int f) { return {BoxSpec{{a, b, c, d, e, f}}}; }
inline FamilySpec cylinder_spec(int a, int b, int c, int d, int e, int f)
{
    return {CylinderSpec{{a, b, c, d, e, f}}};
}
inline FamilySpec join_spec(std::vector<FamilySpec> parts) { return {JoinSpec{std::move(parts)}}; }

namespace detail {

// Appends a path of `length` edges between existing vertices a and b.
inline void add_ear(Multigraph& g, Vertex a, Vertex b, int length)
{
    Vertex prev = a;
    for (int i = 1; i < length; ++i) {
        Vertex w = g.add_vertex();
        g.add_edge(prev, w);
        prev = w;
    }
    g.add_edge(prev, b);
}

template <class Range>
void require_positive(const Range& values, const char* family)
{
    for (int v : values)
        if (v < 1)
            throw DomainError(std::string(family) + " lengths must be positive");
}

} // namespace detail

/// Rejects specs that would produce parallel edges or loops.
inline bool is_simple_spec(const FamilySpec& spec)
{
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CycleSpec>)
                return s.n >= 3;
            else if constexpr (std::is_same_v<T, MultiedgeSpec>)
                return s.m == 1;
            else if constexpr (std::is_same_v<T, PathSpec>)
                return true;
            else if constexpr (std::is_same_v<T, ThetaSpec>)
                return std::count(s.lengths.begin(), s.lengths.end(), 1) <= 1;
            else if constexpr (std::is_same_v<T, DeltaSpec> || std::is_same_v<T, CylinderSpec>)
                return !(s.p[0] == 1 && s.p[1] == 1) && !(s.p[2] == 1 && s.p[3] == 1);
            else if constexpr (std::is_same_v<T, BoxSpec>)
                return true;
            else
                return std::all_of(s.parts.begin(), s.parts.end(), [](const FamilySpec& p) { return is_simple_spec(p); });
        },
        spec.node);
}

inline Multigraph build(const FamilySpec& spec)
{
    return std::visit(
        [](const auto& s) -> Multigraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CycleSpec>) {
                return cycle_graph(std::size_t(std::max(s.n, 0)));
            } else if constexpr (std::is_same_v<T, MultiedgeSpec>) {
                return multiedge_graph(std::size_t(std::max(s.m, 0)));
            } else if constexpr (std::is_same_v<T, PathSpec>) {
                if (s.k < 0)
                    throw DomainError("path length must be non-negative");
                return path_graph(std::size_t(s.k));
            } else if constexpr (std::is_same_v<T, ThetaSpec>) {
                if (s.lengths.size() < 2)
                    throw DomainError("theta needs at least two paths");
                detail::require_positive(s.lengths, "theta");
                Multigraph g(2);
                for (int len : s.lengths)
                    detail::add_ear(g, 0, 1, len);
                return g;
            } else if constexpr (std::is_same_v<T, DeltaSpec>) {
                detail::require_positive(s.p, "delta");
                Multigraph g(3); // x=0 y=1 z=2
                detail::add_ear(g, 0, 1, s.p[4]);
                detail::add_ear(g, 0, 2, s.p[0]);
                detail::add_ear(g, 0, 2, s.p[1]);
                detail::add_ear(g, 1, 2, s.p[2]);
                detail::add_ear(g, 1, 2, s.p[3]);
                return g;
            } else if constexpr (std::is_same_v<T, BoxSpec>) {
                detail::require_positive(s.p, "box");
                Multigraph g(4); // u=0 v=1 x=2 y=3
                detail::add_ear(g, 0, 1, s.p[0]);
                detail::add_ear(g, 2, 3, s.p[1]);
                detail::add_ear(g, 0, 2, s.p[2]);
                detail::add_ear(g, 1, 3, s.p[3]);
                detail::add_ear(g, 1, 2, s.p[4]);
                detail::add_ear(g, 0, 3, s.p[5]);
                return g;
            } else if constexpr (std::is_same_v<T, CylinderSpec>) {
                detail::require_positive(s.p, "cylinder");
                Multigraph g(4); // u=0 v=1 x=2 y=3
                detail::add_ear(g, 0, 1, s.p[4]);
                detail::add_ear(g, 2, 3, s.p[5]);
                detail::add_ear(g, 0, 2, s.p[0]);
                detail::add_ear(g, 0, 2, s.p[1]);
                detail::add_ear(g, 1, 3, s.p[2]);
                detail::add_ear(g, 1, 3, s.p[3]);
                return g;
            } else {
                if (s.parts.empty())
                    throw DomainError("empty join");
                Multigraph g = build(s.parts.front());
                for (std::size_t i = 1; i < s.parts.size(); ++i)
                    g = join_at(g, 0, build(s.parts[i]), 0);
                return g;
            }
        },
        spec.node);
}

/// DSL text for a spec (inverse of parse_family).
inline std::string to_string(const FamilySpec& spec)
{
    auto list = [](const auto& values) {
        std::string s;
        for (int v : values)
            s += (s.empty() ? "" : ",") + std::to_string(v);
        return s;
    };
    return std::visit(
        [&](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CycleSpec>)
                return "C" + std::to_string(s.n);
            else if constexpr (std::is_same_v<T, MultiedgeSpec>)
                return s.m == 1 ? std::string("K2") : "M" + std::to_string(s.m);
            else if constexpr (std::is_same_v<T, PathSpec>)
                return "P" + std::to_string(s.k);
            else if constexpr (std::is_same_v<T, ThetaSpec>)
                return "theta:" + list(s.lengths);
            else if constexpr (std::is_same_v<T, DeltaSpec>)
                return "delta:" + list(s.p);
            else if constexpr (std::is_same_v<T, BoxSpec>)
                return "box:" + list(s.p);
            else if constexpr (std::is_same_v<T, CylinderSpec>)
                return "cyl:" + list(s.p);
            else {
                std::string out;
                for (const FamilySpec& p : s.parts)
                    out += (out.empty() ? "" : "*") + to_string(p);
                return out;
            }
        },
        spec.node);
}

namespace detail {

class FamilyParser {
public:
    explicit FamilyParser(const std::string& text)
    {
        for (std::size_t i = 0; i < text.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                chars_.push_back(text[i]);
                origin_.push_back(i);
            }
        origin_.push_back(text.size());
    }

    FamilySpec parse()
    {
        std::vector<FamilySpec> parts;
        parts.push_back(atom());
        while (pos_ < chars_.size() && chars_[pos_] == '*') {
            ++pos_;
            parts.push_back(atom());
        }
        if (pos_ != chars_.size())
            fail("unexpected character '" + std::string(1, chars_[pos_]) + "'");
        return parts.size() == 1 ? std::move(parts.front()) : join_spec(std::move(parts));
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, origin_[pos_]); }

    bool consume(const std::string& word)
    {
        if (chars_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    int integer()
    {
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
            v = v * 10 + (chars_[pos_] - '0');
            if (v > 1'000'000)
                fail("integer too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected integer");
        return int(v);
    }

    std::vector<int> integers()
    {
        std::vector<int> out{integer()};
        while (pos_ < chars_.size() && chars_[pos_] == ',') {
            ++pos_;
            out.push_back(integer());
        }
        return out;
    }

    template <std::size_t N>
    std::array<int, N> fixed(const std::vector<int>& v, const char* family, std::size_t at)
    {
        if (v.size() != N) {
            pos_ = at;
            fail(std::string(family) + " takes " + std::to_string(N) + " lengths");
        }
        std::array<int, N> out{};
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    }

    FamilySpec atom()
    {
        const std::size_t at = pos_;
        FamilySpec spec;
        if (consume("theta:")) {
            auto v = integers();
            if (v.size() < 3) {
                pos_ = at;
                fail("theta takes at least 3 lengths");
            }
            spec = theta_spec(std::move(v));
        } else if (consume("delta:")) {
            spec = {DeltaSpec{fixed<5>(integers(), "delta", at)}};
        } else if (consume("box:")) {
            spec = {BoxSpec{fixed<6>(integers(), "box", at)}};
        } else if (consume("cyl:")) {
            spec = {CylinderSpec{fixed<6>(integers(), "cylinder", at)}};
        } else if (consume("K2")) {
            spec = multiedge_spec(1);
        } else if (consume("C")) {
            spec = cycle_spec(integer());
        } else if (consume("M")) {
            spec = multiedge_spec(integer());
        } else {
            fail("expected a family atom");
        }
        validate(spec, at);
        return spec;
    }

    void validate(const FamilySpec& spec, std::size_t at)
    {
        const std::size_t saved = pos_;
        pos_ = at;
        bool positive = std::visit(
            [](const auto& s) -> bool {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, CycleSpec>)
                    return s.n >= 1;
                else if constexpr (std::is_same_v<T, MultiedgeSpec>)
                    return s.m >= 1;
                else if constexpr (std::is_same_v<T, ThetaSpec>)
                    return std::all_of(s.lengths.begin(), s.lengths.end(), [](int v) { return v >= 1; });
                else if constexpr (std::is_same_v<T, DeltaSpec> || std::is_same_v<T, BoxSpec> ||
                                   std::is_same_v<T, CylinderSpec>)
                    return std::all_of(s.p.begin(), s.p.end(), [](int v) { return v >= 1; });
                else
                    return true;
            },
            spec.node);
        if (!positive)
            fail("lengths must be positive");
        const bool ear_family = !std::holds_alternative<CycleSpec>(spec.node) &&
                                !std::holds_alternative<MultiedgeSpec>(spec.node);
        if (ear_family && !is_simple_spec(spec))
            fail("'" + to_string(spec) + "' is not simple (two parallel ears of length 1)");
        pos_ = saved;
    }

    std::string chars_;
    std::vector<std::size_t> origin_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the family DSL: atoms C<n>, M<m>, K2, theta:a,b,c,..., delta:a..e,
/// box:a..f, cyl:a..f, joined at a cutvertex with '*'. Whitespace is ignored.
inline FamilySpec parse_family(const std::string& text) { return detail::FamilyParser(text).parse(); }

/// theta(a,b,c) with a+b+c = n+1 and lengths as equal as possible.
inline FamilySpec theta_star_spec(int n)
{
    if (n < 4)
        throw DomainError("theta_star requires n >= 4");
    const int total = n + 1, q = total / 3, r = total % 3;
    std::vector<int> lengths(3, q);
    for (int i = 0; i < r; ++i)
        lengths[2 - std::size_t(i)] += 1;
    return theta_spec(lengths);
}

inline Multigraph theta_star(int n) { return build(theta_star_spec(n)); }

/// Box graph with ear lengths summing to n+2, as equal as possible, with the
/// most opposite pairs (a,b),(c,d),(e,f) equal; ties go to the
/// lexicographically largest (a,...,f).
inline FamilySpec box_star_spec(int n)
{
    if (n < 4)
        throw DomainError("box_star requires n >= 4");
    const int total = n + 2, q = total / 6, r = total % 6;
    std::array<int, 6> lengths{};
    for (int i = 0; i < 6; ++i)
        lengths[std::size_t(i)] = q + (i < r ? 1 : 0);
    std::sort(lengths.begin(), lengths.end());
    std::array<int, 6> best{};
    int best_equal = -1;
    do {
        const int equal = int(lengths[0] == lengths[1]) + int(lengths[2] == lengths[3]) + int(lengths[4] == lengths[5]);
        if (equal > best_equal || (equal == best_equal && lengths > best)) {
            best_equal = equal;
            best = lengths;
        }
    } while (std::next_permutation(lengths.begin(), lengths.end()));
    return {BoxSpec{best}};
}

inline Multigraph box_star(int n) { return build(box_star_spec(n)); }

namespace detail {

struct Skeleton {
    std::vector<Vertex> branch;                 // branch vertices of the block
    std::vector<std::vector<std::vector<int>>> ears; // ears[i][j]: lengths between branch i and j (i<j)
};

inline std::optional<Skeleton> skeleton_of(const Multigraph& b)
{
    const auto deg = b.degrees();
    Skeleton s;
    std::vector<int> index(b.vertex_count(), -1);
    for (Vertex v = 0; v < b.vertex_count(); ++v)
        if (deg[v] != 2) {
            index[v] = int(s.branch.size());
            s.branch.push_back(v);
        }
    const std::size_t k = s.branch.size();
    s.ears.assign(k, std::vector<std::vector<int>>(k));
    for (const Ear& e : find_ears(b)) {
        if (e.cycle)
            return std::nullopt;
        int i = index[e.ends.first], j = index[e.ends.second];
        if (i < 0 || j < 0 || i == j)
            return std::nullopt;
        if (i > j)
            std::swap(i, j);
        s.ears[std::size_t(i)][std::size_t(j)].push_back(int(e.length()));
    }
    for (auto& row : s.ears)
        for (auto& cell : row)
            std::sort(cell.begin(), cell.end());
    return s;
}

inline const std::vector<int>& ears_between(const Skeleton& s, std::size_t i, std::size_t j)
{
    return i < j ? s.ears[i][j] : s.ears[j][i];
}

// Family rendering of one block, if it belongs to a named family.
inline std::optional<std::string> recognize_block(const Multigraph& b)
{
    const std::size_t n = b.vertex_count(), m = b.edge_count();
    if (n == 1)
        return m == 1 ? std::optional<std::string>("C1") : std::nullopt;
    if (n == 2)
        return m == 1 ? std::string("K2") : "M" + std::to_string(m);
    if (n == m)
        return "C" + std::to_string(n);
    if (b.loop_count() > 0)
        return std::nullopt;
    auto sk = skeleton_of(b);
    if (!sk)
        return std::nullopt;
    const std::size_t k = sk->branch.size();
    if (k == 2)
        return to_string(theta_spec(sk->ears[0][1]));

    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i)
        perm[i] = i;
    if (k == 3) {
        std::optional<std::array<int, 5>> best;
        do {
            const std::size_t x = perm[0], y = perm[1], z = perm[2];
            const auto &xy = ears_between(*sk, x, y), &xz = ears_between(*sk, x, z), &yz = ears_between(*sk, y, z);
            if (xy.size() != 1 || xz.size() != 2 || yz.size() != 2)
                continue;
            std::array<int, 5> p{xz[1], xz[0], yz[1], yz[0], xy[0]};
            if (!best || p > *best)
                best = p;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (best)
            return to_string(FamilySpec{DeltaSpec{*best}});
        return std::nullopt;
    }
    if (k == 4) {
        std::optional<std::array<int, 6>> box, cyl;
        do {
            const std::size_t u = perm[0], v = perm[1], x = perm[2], y = perm[3];
            const auto &uv = ears_between(*sk, u, v), &xy = ears_between(*sk, x, y), &ux = ears_between(*sk, u, x),
                       &vy = ears_between(*sk, v, y), &vx = ears_between(*sk, v, x), &uy = ears_between(*sk, u, y);
            if (uv.size() == 1 && xy.size() == 1 && ux.size() == 1 && vy.size() == 1 && vx.size() == 1 &&
                uy.size() == 1) {
                std::array<int, 6> p{uv[0], xy[0], ux[0], vy[0], vx[0], uy[0]};
                if (!box || p > *box)
                    box = p;
            }
            if (uv.size() == 1 && xy.size() == 1 && ux.size() == 2 && vy.size() == 2 && vx.empty() && uy.empty()) {
                std::array<int, 6> p{ux[1], ux[0], vy[1], vy[0], uv[0], xy[0]};
                if (!cyl || p > *cyl)
                    cyl = p;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (box)
            return to_string(FamilySpec{BoxSpec{*box}});
        if (cyl)
            return to_string(FamilySpec{CylinderSpec{*cyl}});
    }
    return std::nullopt;
}

} // namespace detail

/// Family-DSL rendering of a connected graph whose every block is a named
/// family member (e.g. "C3*C4", "theta:2,2,2*K2"); nothing otherwise.
/// Bridges are listed last.
inline std::optional<std::string> recognize_family(const Multigraph& g)
{
    if (!g.is_connected() || g.edge_count() == 0)
        return std::nullopt;
    std::vector<std::string> parts;
    std::size_t bridges = 0;
    for (const Multigraph& b : block_decompose(g)) {
        auto r = detail::recognize_block(b);
        if (!r)
            return std::nullopt;
        if (*r == "K2")
            ++bridges;
        else
            parts.push_back(*r);
    }
    std::sort(parts.begin(), parts.end());
    parts.insert(parts.end(), bridges, "K2");
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : "*") + p;
    return out;
}

} // namespace tuttepo
