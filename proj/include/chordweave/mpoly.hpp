#pragma once

// Sparse multivariate Laurent polynomials over Rat.
//
// The variable alphabet is fixed: t, y, a, z, h, and the indexed families
// x(i), s(d), G(d). Exponents may be negative only on the Laurent variables
// y, a, z. Terms live in a map ordered so that iteration order equals the
// canonical text rendering order.

#include "rational.hpp"
#include "util.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chordweave {

// Declaration order is the canonical variable order:
// t < y < a < z < h < x(1) < x(2) < ... < s(1) < ... < G(1) < ...
enum class VarFamily : std::uint8_t { T, Y, A, Z, H, X, S, G };

struct VarId {
    VarFamily family = VarFamily::T;
    std::uint32_t index = 0; // 0 for t,y,a,z,h; >= 1 for x,s,G

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId&, const VarId&) = default;

    static VarId t() { return {VarFamily::T, 0}; }
    static VarId y() { return {VarFamily::Y, 0}; }
    static VarId a() { return {VarFamily::A, 0}; }
    static VarId z() { return {VarFamily::Z, 0}; }
    static VarId h() { return {VarFamily::H, 0}; }
    static VarId x(std::uint32_t i) { return {VarFamily::X, check_index(i)}; }
    static VarId s(std::uint32_t d) { return {VarFamily::S, check_index(d)}; }
    static VarId G(std::uint32_t d) { return {VarFamily::G, check_index(d)}; }

private:
    static std::uint32_t check_index(std::uint32_t i)
    {
        if (i == 0)
            throw Error("variable index must be >= 1");
        return i;
    }
};

inline bool is_laurent(VarId v)
{
    return v.family == VarFamily::Y || v.family == VarFamily::A ||
           v.family == VarFamily::Z;
}

inline std::string var_name(VarId v)
{
    switch (v.family) {
    case VarFamily::T: return "t";
    case VarFamily::Y: return "y";
    case VarFamily::A: return "a";
    case VarFamily::Z: return "z";
    case VarFamily::H: return "h";
    case VarFamily::X: return "x" + std::to_string(v.index);
    case VarFamily::S: return "s" + std::to_string(v.index);
    case VarFamily::G: return "G" + std::to_string(v.index);
    }
    throw Error("unreachable variable family");
}

// Sorted by VarId, exponents nonzero.
using Monomial = std::vector<std::pair<VarId, int>>;

// Term order used both for storage and for text rendering: scan variables
// in canonical order; at the first variable whose exponents differ, the
// monomial with the larger exponent comes first.
struct TermOrder {
    bool operator()(const Monomial& m1, const Monomial& m2) const
    {
        std::size_t i = 0, j = 0;
        while (i < m1.size() || j < m2.size()) {
            if (i == m1.size()) {
                // m1 has exponent 0 on every remaining variable of m2
                return 0 > m2[j].second;
            }
            if (j == m2.size())
                return m1[i].second > 0;
            if (m1[i].first == m2[j].first) {
                if (m1[i].second != m2[j].second)
                    return m1[i].second > m2[j].second;
                ++i, ++j;
            } else if (m1[i].first < m2[j].first) {
                // m2 has exponent 0 on this variable
                return m1[i].second > 0;
            } else {
                return 0 > m2[j].second;
            }
        }
        return false;
    }
};

inline Monomial mono_mul(const Monomial& m1, const Monomial& m2)
{
    Monomial out;
    out.reserve(m1.size() + m2.size());
    std::size_t i = 0, j = 0;
    while (i < m1.size() || j < m2.size()) {
        if (j == m2.size() || (i < m1.size() && m1[i].first < m2[j].first)) {
            out.push_back(m1[i++]);
        } else if (i == m1.size() || m2[j].first < m1[i].first) {
            out.push_back(m2[j++]);
        } else {
            int e = m1[i].second + m2[j].second;
            if (e != 0)
                out.emplace_back(m1[i].first, e);
            ++i, ++j;
        }
    }
    return out;
}

class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, TermOrder>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }

    static MPoly constant(const Rat& c)
    {
        MPoly p;
        if (c != 0)
            p.terms_.emplace(Monomial{}, c);
        return p;
    }

    static MPoly constant(long c) { return constant(Rat(c)); }

    static MPoly variable(VarId v, int exp = 1)
    {
        if (exp == 0)
            return constant(1);
        check_exponent(v, exp);
        MPoly p;
        p.terms_.emplace(Monomial{{v, exp}}, Rat(1));
        return p;
    }

    static MPoly term(const Rat& c, const Monomial& m)
    {
        MPoly p;
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rat constant_value() const
    {
        if (terms_.empty())
            return Rat(0);
        if (!is_constant())
            throw Error("polynomial is not constant: " + render());
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rat& c)
    {
        if (c == 0)
            return;
        for (const auto& [v, e] : m)
            check_exponent(v, e);
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& q)
    {
        for (const auto& [m, c] : q.terms_)
            add_term(m, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& q)
    {
        for (const auto& [m, c] : q.terms_)
            add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly p, const MPoly& q) { return p += q; }
    friend MPoly operator-(MPoly p, const MPoly& q) { return p -= q; }

    friend MPoly operator-(const MPoly& p)
    {
        MPoly out;
        for (const auto& [m, c] : p.terms_)
            out.terms_.emplace(m, -c);
        return out;
    }

    friend MPoly operator*(const MPoly& p, const MPoly& q)
    {
        MPoly out;
        for (const auto& [m1, c1] : p.terms_)
            for (const auto& [m2, c2] : q.terms_)
                out.add_term(mono_mul(m1, m2), c1 * c2);
        return out;
    }

    MPoly& operator*=(const MPoly& q) { return *this = *this * q; }

    friend MPoly operator*(const Rat& c, const MPoly& p)
    {
        MPoly out;
        if (c == 0)
            return out;
        for (const auto& [m, k] : p.terms_)
            out.terms_.emplace(m, c * k);
        return out;
    }

    friend bool operator==(const MPoly& p, const MPoly& q)
    {
        return p.terms_ == q.terms_;
    }

    MPoly pow(int e) const
    {
        if (e < 0) {
            return invert_single_term().pow(-e);
        }
        MPoly acc = constant(1);
        for (int i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    // Simultaneous substitution; variables absent from the map are kept.
    MPoly substitute(const std::map<VarId, MPoly>& bindings) const
    {
        MPoly out;
        for (const auto& [m, c] : terms_) {
            MPoly term = constant(c);
            for (const auto& [v, e] : m) {
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    term = term * variable(v, e);
                } else {
                    term = term * it->second.pow(e);
                }
            }
            out += term;
        }
        return out;
    }

    // Coefficient of v^k, a polynomial in the remaining variables.
    MPoly coeff_of(VarId v, int k) const
    {
        MPoly out;
        for (const auto& [m, c] : terms_) {
            int e = exponent_of(m, v);
            if (e != k)
                continue;
            Monomial rest;
            for (const auto& ve : m)
                if (ve.first != v)
                    rest.push_back(ve);
            out.add_term(rest, c);
        }
        return out;
    }

    int degree_in(VarId v) const
    {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, exponent_of(m, v));
        return d;
    }

    std::set<VarId> vars() const
    {
        std::set<VarId> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m)
                out.insert(v);
        return out;
    }

    static int exponent_of(const Monomial& m, VarId v)
    {
        for (const auto& [w, e] : m)
            if (w == v)
                return e;
        return 0;
    }

    std::string render() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool neg = c < 0;
            Rat mag = neg ? Rat(-c) : c;
            std::string body;
            if (m.empty()) {
                body = to_string(mag);
            } else {
                if (mag != 1)
                    body = to_string(mag) + "*";
                bool first_var = true;
                for (const auto& [v, e] : m) {
                    if (!first_var)
                        body += "*";
                    first_var = false;
                    body += var_name(v);
                    if (e != 1)
                        body += "^" + std::to_string(e);
                }
            }
            if (first) {
                out = (neg ? "-" : "") + body;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
        }
        return out;
    }

    static MPoly parse(const std::string& text);

private:
    static void check_exponent(VarId v, int e)
    {
        if (e < 0 && !is_laurent(v))
            throw Error("laurent-violation: negative exponent on " + var_name(v));
    }

    MPoly invert_single_term() const
    {
        if (terms_.size() != 1)
            throw Error("laurent-violation: cannot invert " + render());
        const auto& [m, c] = *terms_.begin();
        Monomial inv;
        for (const auto& [v, e] : m)
            inv.emplace_back(v, -e);
        MPoly out;
        out.add_term(inv, Rat(1) / c); // add_term enforces Laurent limits
        return out;
    }

    TermMap terms_;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    MPoly run()
    {
        MPoly result;
        skip_ws();
        if (done())
            throw Error("parse error: empty polynomial");
        bool first = true;
        while (!done()) {
            int sign = 1;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw Error("parse error: expected '+' or '-' at position " +
                            std::to_string(pos_));
            }
            result += parse_term(sign);
            skip_ws();
            first = false;
        }
        return result;
    }

private:
    MPoly parse_term(int sign)
    {
        Rat coeff(sign);
        std::map<VarId, int> exps;
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (done())
                throw Error("parse error: dangling term");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                auto [v, e] = parse_varpow();
                exps[v] += e;
            } else {
                throw Error(std::string("parse error: unexpected '") + c + "'");
            }
            skip_ws();
            if (!done() && peek() == '*') {
                ++pos_;
            } else {
                expect_factor = false;
            }
        }
        Monomial m;
        for (const auto& [v, e] : exps)
            if (e != 0)
                m.emplace_back(v, e);
        std::sort(m.begin(), m.end());
        return MPoly::term(coeff, m);
    }

    Rat parse_number()
    {
        std::string num = parse_digits();
        if (!done() && peek() == '/') {
            ++pos_;
            std::string den = parse_digits();
            return rat_from_string(num + "/" + den);
        }
        return rat_from_string(num);
    }

    std::string parse_digits()
    {
        std::string out;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            out += s_[pos_++];
        if (out.empty())
            throw Error("parse error: expected digits");
        return out;
    }

    std::pair<VarId, int> parse_varpow()
    {
        char c = s_[pos_++];
        VarId v;
        switch (c) {
        case 't': v = VarId::t(); break;
        case 'y': v = VarId::y(); break;
        case 'a': v = VarId::a(); break;
        case 'z': v = VarId::z(); break;
        case 'h': v = VarId::h(); break;
        case 'x':
        case 's':
        case 'G': {
            std::string idx = parse_digits();
            std::uint32_t i = static_cast<std::uint32_t>(std::stoul(idx));
            v = c == 'x' ? VarId::x(i) : c == 's' ? VarId::s(i) : VarId::G(i);
            break;
        }
        default:
            throw Error(std::string("parse error: unknown variable '") + c + "'");
        }
        int e = 1;
        if (!done() && peek() == '^') {
            ++pos_;
            int esign = 1;
            if (!done() && peek() == '-') {
                esign = -1;
                ++pos_;
            }
            e = esign * static_cast<int>(std::stol(parse_digits()));
        }
        return {v, e};
    }

    void skip_ws()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline MPoly MPoly::parse(const std::string& text)
{
    return detail::PolyParser(text).run();
}

} // namespace chordweave
