#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tuttepo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent pair of a bivariate monomial x^x y^y.
struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: x-degree descending, then y-degree ascending.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept
    {
        if (a.x != b.x)
            return a.x > b.x;
        return a.y < b.y;
    }
};

/// Sparse bivariate polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is polynomial equality. Iteration follows the canonical term order.
class BiPoly {
public:
    using TermMap = std::map<Monomial, Integer, CanonicalOrder>;

    BiPoly() = default;
    BiPoly(long long constant) // NOLINT: implicit conversion from integers is intended
    {
        if (constant != 0)
            terms_.emplace(Monomial{0, 0}, Integer(constant));
    }
    BiPoly(const Integer& constant) // NOLINT
    {
        if (constant != 0)
            terms_.emplace(Monomial{0, 0}, constant);
    }

    static BiPoly monomial(std::uint32_t xdeg, std::uint32_t ydeg, Integer coefficient = 1)
    {
        BiPoly p;
        if (coefficient != 0)
            p.terms_.emplace(Monomial{xdeg, ydeg}, std::move(coefficient));
        return p;
    }
    static BiPoly x(std::uint32_t power = 1) { return monomial(power, 0); }
    static BiPoly y(std::uint32_t power = 1) { return monomial(0, power); }

    /// x + y - xy, the divisor that defines the poset relation.
    static BiPoly connector()
    {
        BiPoly p;
        p.terms_.emplace(Monomial{1, 0}, Integer(1));
        p.terms_.emplace(Monomial{1, 1}, Integer(-1));
        p.terms_.emplace(Monomial{0, 1}, Integer(1));
        return p;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Integer coefficient(std::uint32_t xdeg, std::uint32_t ydeg) const
    {
        auto it = terms_.find(Monomial{xdeg, ydeg});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Adds `value` to the coefficient of x^xdeg y^ydeg, dropping the term if it cancels.
    void add_term(std::uint32_t xdeg, std::uint32_t ydeg, const Integer& value)
    {
        if (value == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(Monomial{xdeg, ydeg}, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::uint32_t degree_x() const noexcept
    {
        // Canonical order puts the largest x-degree first.
        return terms_.empty() ? 0 : terms_.begin()->first.x;
    }

    std::uint32_t degree_y() const noexcept
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.y);
        return d;
    }

    /// Total degree (max of x+y over stored terms).
    std::uint32_t degree() const noexcept
    {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.x + m.y);
        return d;
    }

    bool all_coefficients_nonnegative() const noexcept
    {
        for (const auto& [m, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    bool all_coefficients_nonpositive() const noexcept
    {
        for (const auto& [m, c] : terms_)
            if (c > 0)
                return false;
        return true;
    }

    BiPoly& operator+=(const BiPoly& other)
    {
        for (const auto& [m, c] : other.terms_)
            add_term(m.x, m.y, c);
        return *this;
    }

    BiPoly& operator-=(const BiPoly& other)
    {
        for (const auto& [m, c] : other.terms_)
            add_term(m.x, m.y, -c);
        return *this;
    }

    BiPoly operator-() const
    {
        BiPoly r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
        return r;
    }

    BiPoly& operator*=(const BiPoly& other) { return *this = *this * other; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Exact value at a rational point.
    Rational evaluate(const Rational& x0, const Rational& y0) const
    {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational term = Rational(c);
            for (std::uint32_t i = 0; i < m.x; ++i)
                term *= x0;
            for (std::uint32_t j = 0; j < m.y; ++j)
                term *= y0;
            total += term;
        }
        return total;
    }

    /// Exact value at an integer point.
    Integer evaluate(const Integer& x0, const Integer& y0) const
    {
        Integer total = 0;
        for (const auto& [m, c] : terms_)
            total += c * boost::multiprecision::pow(x0, m.x) * boost::multiprecision::pow(y0, m.y);
        return total;
    }

    /// Canonical text rendering, e.g. "x^3 + x^2 + x + y" or "-2x^2y + 3".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first)
                out << (c < 0 ? "-" : "");
            else
                out << (c < 0 ? " - " : " + ");
            first = false;
            const bool unit = m.x == 0 && m.y == 0;
            if (mag != 1 || unit)
                out << mag;
            if (m.x > 0) {
                out << 'x';
                if (m.x > 1)
                    out << '^' << m.x;
            }
            if (m.y > 0) {
                out << 'y';
                if (m.y > 1)
                    out << '^' << m.y;
            }
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

private:
    TermMap terms_;
};

/// 1 + v + v^2 + ... + v^(count-1) in the variable chosen by `in_x`; zero when count <= 0.
inline BiPoly geometric_sum(bool in_x, int count)
{
    BiPoly r;
    for (int i = 0; i < count; ++i)
        r.add_term(in_x ? std::uint32_t(i) : 0u, in_x ? 0u : std::uint32_t(i), 1);
    return r;
}

/// Divides `d` by x + y - xy exactly.
///
/// Solves d_{i,j} = p_{i-1,j} + p_{i,j-1} - p_{i-1,j-1} row by row in
/// increasing y-degree, then re-multiplies; any residual means `d` is not
/// a multiple of the connector and nothing is returned.
inline std::optional<BiPoly> quotient_by_connector(const BiPoly& d)
{
    if (d.is_zero())
        return BiPoly{};
    const std::uint32_t dx = d.degree_x();
    const std::uint32_t dy = d.degree_y();
    // Every multiple of the connector has x-degree >= 1 and y-degree >= 1.
    if (dx == 0 || dy == 0)
        return std::nullopt;

    const std::size_t width = dx;  // p has x-degree <= dx - 1
    const std::size_t height = dy; // p has y-degree <= dy - 1
    std::vector<Integer> p(width * height);
    auto at = [&](std::size_t a, std::size_t b) -> Integer& { return p[b * width + a]; };

    for (std::size_t a = 0; a < width; ++a)
        at(a, 0) = d.coefficient(std::uint32_t(a + 1), 0);
    for (std::size_t b = 1; b < height; ++b) {
        for (std::size_t a = 0; a < width; ++a) {
            Integer v = d.coefficient(std::uint32_t(a + 1), std::uint32_t(b));
            if (a + 1 < width)
                v -= at(a + 1, b - 1);
            v += at(a, b - 1);
            at(a, b) = std::move(v);
        }
    }

    BiPoly quotient;
    for (std::size_t b = 0; b < height; ++b)
        for (std::size_t a = 0; a < width; ++a)
            quotient.add_term(std::uint32_t(a), std::uint32_t(b), at(a, b));

    if (BiPoly::connector() * quotient != d)
        return std::nullopt;
    return quotient;
}

} // namespace tuttepo
