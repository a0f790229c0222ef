#pragma once

// Truncated power series in the formal parameter h, exact coefficients.
// Combining two series truncates at the smaller order.

#include "mpoly.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace chordweave {

class HSeries {
public:
    explicit HSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1)
    {
        if (order < 0)
            throw Error("series order must be >= 0");
    }

    static HSeries one(int order)
    {
        HSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rat& operator[](int i) const { return coeffs_.at(i); }
    Rat& operator[](int i) { return coeffs_.at(i); }

    friend HSeries operator+(const HSeries& f, const HSeries& g)
    {
        HSeries out(std::min(f.order(), g.order()));
        for (int i = 0; i <= out.order(); ++i)
            out[i] = f[i] + g[i];
        return out;
    }

    friend HSeries operator-(const HSeries& f, const HSeries& g)
    {
        HSeries out(std::min(f.order(), g.order()));
        for (int i = 0; i <= out.order(); ++i)
            out[i] = f[i] - g[i];
        return out;
    }

    friend HSeries operator*(const HSeries& f, const HSeries& g)
    {
        HSeries out(std::min(f.order(), g.order()));
        for (int i = 0; i <= out.order(); ++i)
            for (int j = 0; i + j <= out.order() && j <= g.order(); ++j)
                out[i + j] += f[i] * g[j];
        return out;
    }

    friend HSeries operator*(const Rat& c, const HSeries& f)
    {
        HSeries out(f.order());
        for (int i = 0; i <= f.order(); ++i)
            out[i] = c * f[i];
        return out;
    }

    friend bool operator==(const HSeries& f, const HSeries& g)
    {
        return f.coeffs_ == g.coeffs_;
    }

    HSeries inverse() const
    {
        if (coeffs_[0] == 0)
            throw Error("series with zero constant term is not invertible");
        HSeries out(order());
        out[0] = 1 / coeffs_[0];
        for (int i = 1; i <= order(); ++i) {
            Rat acc(0);
            for (int j = 1; j <= i; ++j)
                acc += coeffs_[j] * out[i - j];
            out[i] = -acc / coeffs_[0];
        }
        return out;
    }

    HSeries pow(int e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        HSeries acc = one(order());
        for (int i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    // exp(c*h) truncated
    static HSeries exp_ch(const Rat& c, int order)
    {
        HSeries out(order);
        Rat term(1);
        out[0] = term;
        for (int m = 1; m <= order; ++m) {
            term = term * c / m;
            out[m] = term;
        }
        return out;
    }

    std::string render() const
    {
        MPoly p;
        for (int i = 0; i <= order(); ++i)
            if (coeffs_[i] != 0)
                p.add_term(i == 0 ? Monomial{} : Monomial{{VarId::h(), i}},
                           coeffs_[i]);
        return p.render();
    }

private:
    std::vector<Rat> coeffs_;
};

// Each variable of p is bound to exp(c*h); the monomial v1^e1*...*vk^ek
// becomes exp((e1*c1+...+ek*ck)*h), expanded to the given order.
inline HSeries expand_exponential(const MPoly& p,
                                  const std::map<VarId, Rat>& rules, int order)
{
    HSeries out(order);
    for (const auto& [m, c] : p.terms()) {
        Rat total(0);
        for (const auto& [v, e] : m) {
            auto it = rules.find(v);
            if (it == rules.end())
                throw Error("unbound variable in exponential expansion: " +
                            var_name(v));
            total += it->second * e;
        }
        out = out + c * HSeries::exp_ch(total, order);
    }
    return out;
}

// General series evaluation: every variable of p is bound to a base series.
// Negative exponents go through the series inverse and therefore require a
// nonzero constant term.
inline HSeries series_eval(const MPoly& p,
                           const std::map<VarId, HSeries>& bases, int order)
{
    HSeries out(order);
    for (const auto& [m, c] : p.terms()) {
        HSeries term = HSeries::one(order);
        for (const auto& [v, e] : m) {
            auto it = bases.find(v);
            if (it == bases.end())
                throw Error("unbound variable in series evaluation: " +
                            var_name(v));
            term = term * it->second.pow(e);
        }
        out = out + c * term;
    }
    return out;
}

} // namespace chordweave
