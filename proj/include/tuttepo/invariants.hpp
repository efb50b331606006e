#pragma once

#include "tuttepo/bipoly.hpp"
#include "tuttepo/errors.hpp"
#include "tuttepo/multigraph.hpp"
#include "tuttepo/parallel.hpp"
#include "tuttepo/poset.hpp"
#include "tuttepo/tutte.hpp"

#include <array>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tuttepo {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); } // NOLINT
    UniPoly(long long constant) : c_{Rational(constant)} { trim(); }                    // NOLINT
    explicit UniPoly(const Rational& constant) : c_{constant} { trim(); }

    /// The variable itself.
    static UniPoly var() { return UniPoly(std::vector<Rational>{0, 1}); }

    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return int(c_.size()) - 1; }
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational evaluate(const Rational& t) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    UniPoly pow(unsigned e) const
    {
        UniPoly r = 1, base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1)
                r = r * base;
            base = base * base;
        }
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + UniPoly(-1) * b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Highest degree first in the given variable, e.g. "-p^3 + 3p - 1".
    std::string to_string(const std::string& var = "p") const
    {
        if (c_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& v = c_[k];
            if (v == 0)
                continue;
            const Rational mag = v < 0 ? Rational(-v) : v;
            out << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
            first = false;
            if (mag != 1 || k == 0)
                out << mag;
            if (k > 0)
                out << var;
            if (k > 1)
                out << '^' << k;
        }
        return out.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// The seven Tutte evaluations tracked by the monotonicity audit.
struct ParamTable {
    Integer spanning_trees;              // T(1,1)
    Integer spanning_forests;            // T(2,1)
    Integer spanning_connected_subgraphs; // T(1,2)
    Integer spanning_subgraphs;          // T(2,2)
    Integer acyclic_orientations;        // T(2,0)
    Integer totally_cyclic_orientations; // T(0,2)
    Integer acyclic_single_source;       // T(1,0)

    static constexpr std::size_t size = 7;

    static const std::array<const char*, size>& names()
    {
        static const std::array<const char*, size> n{
            "spanning_trees",       "spanning_forests",            "spanning_connected_subgraphs",
            "spanning_subgraphs",   "acyclic_orientations",        "totally_cyclic_orientations",
            "acyclic_single_source"};
        return n;
    }

    std::array<Integer, size> values() const
    {
        return {spanning_trees,       spanning_forests,            spanning_connected_subgraphs, spanning_subgraphs,
                acyclic_orientations, totally_cyclic_orientations, acyclic_single_source};
    }

    friend bool operator==(const ParamTable&, const ParamTable&) = default;
};

inline ParamTable param_table_of(const BiPoly& t)
{
    auto at = [&](int x, int y) { return t.evaluate(Integer(x), Integer(y)); };
    return {at(1, 1), at(2, 1), at(1, 2), at(2, 2), at(2, 0), at(0, 2), at(1, 0)};
}

namespace detail {

inline void require_connected(const Multigraph& g, const char* what)
{
    if (g.vertex_count() == 0 || !g.is_connected())
        throw DomainError(std::string(what) + " requires a connected graph");
}

/// h_j = coefficient of y^j in T(1,y).
inline std::vector<Integer> tutte_at_x1(const BiPoly& t, std::size_t nullity)
{
    std::vector<Integer> h(nullity + 1, 0);
    for (const auto& [mono, c] : t.terms())
        h.at(mono.y) += c;
    return h;
}

/// Substitutes `arg` for the chosen variable of T while the other is fixed at zero.
inline UniPoly tutte_on_axis(const BiPoly& t, bool along_x, const UniPoly& arg)
{
    UniPoly r;
    for (const auto& [mono, c] : t.terms()) {
        const std::uint32_t other = along_x ? mono.y : mono.x;
        if (other != 0)
            continue;
        r = r + UniPoly(Rational(c)) * arg.pow(along_x ? mono.x : mono.y);
    }
    return r;
}

inline int sign_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

} // namespace detail

inline ParamTable param_table(const Multigraph& g, const TutteEngine& engine = default_engine())
{
    detail::require_connected(g, "param_table");
    return param_table_of(engine.tutte(g));
}

/// R(G;p) = (1-p)^(n-1) p^(m-n+1) T(1, 1/p) with p the edge failure probability.
inline UniPoly reliability_from_tutte(const BiPoly& t, std::size_t n, std::size_t m)
{
    const std::size_t c = m + 1 - n;
    const auto h = detail::tutte_at_x1(t, c);
    UniPoly sum;
    for (std::size_t j = 0; j <= c; ++j)
        sum = sum + UniPoly(Rational(h[j])) * UniPoly::var().pow(unsigned(c - j));
    return (UniPoly(1) - UniPoly::var()).pow(unsigned(n - 1)) * sum;
}

/// Reliability as a polynomial in the edge operating probability r = 1 - p.
inline UniPoly reliability_operational_from_tutte(const BiPoly& t, std::size_t n, std::size_t m)
{
    const std::size_t c = m + 1 - n;
    const auto h = detail::tutte_at_x1(t, c);
    const UniPoly q = UniPoly(1) - UniPoly::var();
    UniPoly sum;
    for (std::size_t j = 0; j <= c; ++j)
        sum = sum + UniPoly(Rational(h[j])) * q.pow(unsigned(c - j));
    return UniPoly::var().pow(unsigned(n - 1)) * sum;
}

/// P(G;k) = (-1)^(n-1) k T(1-k, 0).
inline UniPoly chromatic_from_tutte(const BiPoly& t, std::size_t n)
{
    const UniPoly k = UniPoly::var();
    return UniPoly(detail::sign_power(n - 1)) * k * detail::tutte_on_axis(t, true, UniPoly(1) - k);
}

/// F(G;k) = (-1)^(m-n+1) T(0, 1-k).
inline UniPoly flow_from_tutte(const BiPoly& t, std::size_t n, std::size_t m)
{
    const UniPoly k = UniPoly::var();
    return UniPoly(detail::sign_power(m + 1 - n)) * detail::tutte_on_axis(t, false, UniPoly(1) - k);
}

inline UniPoly reliability(const Multigraph& g, const TutteEngine& engine = default_engine())
{
    detail::require_connected(g, "reliability");
    return reliability_from_tutte(engine.tutte(g), g.vertex_count(), g.edge_count());
}

inline UniPoly reliability_operational(const Multigraph& g, const TutteEngine& engine = default_engine())
{
    detail::require_connected(g, "reliability");
    return reliability_operational_from_tutte(engine.tutte(g), g.vertex_count(), g.edge_count());
}

inline UniPoly chromatic(const Multigraph& g, const TutteEngine& engine = default_engine())
{
    detail::require_connected(g, "chromatic");
    return chromatic_from_tutte(engine.tutte(g), g.vertex_count());
}

inline UniPoly flow(const Multigraph& g, const TutteEngine& engine = default_engine())
{
    detail::require_connected(g, "flow");
    return flow_from_tutte(engine.tutte(g), g.vertex_count(), g.edge_count());
}

/// One comparison made by the audit: value(lower) <= value(upper).
struct AuditCheck {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::string quantity; // parameter name, or "chromatic|c_3|" style for coefficients
    std::string lower_value;
    std::string upper_value;
    bool ok = true;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    std::size_t cover_edges = 0;
    /// Positions where |coefficient| of R in the failure probability p
    /// decreases along a cover edge. Informational only: that basis carries
    /// no monotonicity guarantee (see README).
    std::size_t failure_basis_decreases = 0;

    std::size_t violations() const
    {
        std::size_t v = 0;
        for (const AuditCheck& c : checks)
            v += c.ok ? 0 : 1;
        return v;
    }
    bool passed() const { return violations() == 0; }
};

namespace detail {

inline void magnitude_checks(std::vector<AuditCheck>& out, std::size_t i, std::size_t j, const std::string& name,
                             const UniPoly& lo, const UniPoly& hi)
{
    const std::size_t len = std::max(lo.coefficients().size(), hi.coefficients().size());
    for (std::size_t k = 0; k < len; ++k) {
        const Rational a = abs(lo.coefficient(k)), b = abs(hi.coefficient(k));
        out.push_back({i, j, name + "|c_" + std::to_string(k) + "|", a.str(), b.str(), a <= b});
    }
}

} // namespace detail

/// Checks every cover edge of `p` for nondecreasing Tutte evaluations and
/// coefficient magnitudes of reliability (in the operating probability),
/// chromatic and flow polynomials.
inline AuditReport monotonicity_audit(const TuttePoset& p)
{
    const std::size_t n = p.spec().n, m = p.spec().m;
    const auto& covers = p.cover_edges();
    std::vector<std::vector<AuditCheck>> per_edge(covers.size());
    std::vector<std::size_t> decreases(covers.size(), 0);
    parallel_for(covers.size(), [&](std::size_t e) {
        const auto [i, j] = covers[e];
        const BiPoly& lo = p.nodes()[i].tutte;
        const BiPoly& hi = p.nodes()[j].tutte;
        auto& out = per_edge[e];
        const auto a = param_table_of(lo).values(), b = param_table_of(hi).values();
        for (std::size_t k = 0; k < ParamTable::size; ++k)
            out.push_back({i, j, ParamTable::names()[k], a[k].str(), b[k].str(), a[k] <= b[k]});
        detail::magnitude_checks(out, i, j, "reliability", reliability_operational_from_tutte(lo, n, m),
                                 reliability_operational_from_tutte(hi, n, m));
        detail::magnitude_checks(out, i, j, "chromatic", chromatic_from_tutte(lo, n), chromatic_from_tutte(hi, n));
        detail::magnitude_checks(out, i, j, "flow", flow_from_tutte(lo, n, m), flow_from_tutte(hi, n, m));

        const UniPoly rl = reliability_from_tutte(lo, n, m), rh = reliability_from_tutte(hi, n, m);
        for (std::size_t k = 0; k <= m; ++k)
            if (abs(rl.coefficient(k)) > abs(rh.coefficient(k)))
                ++decreases[e];
    });
    AuditReport report;
    report.cover_edges = covers.size();
    for (std::size_t e = 0; e < covers.size(); ++e) {
        for (auto& c : per_edge[e])
            report.checks.push_back(std::move(c));
        report.failure_basis_decreases += decreases[e];
    }
    return report;
}

/// Aligned two-column text table.
inline std::string param_table_text(const ParamTable& t)
{
    std::ostringstream out;
    const auto values = t.values();
    for (std::size_t k = 0; k < ParamTable::size; ++k)
        out << std::left << std::setw(30) << ParamTable::names()[k] << values[k] << '\n';
    return out.str();
}

} // namespace tuttepo
