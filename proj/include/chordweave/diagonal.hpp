#pragma once

// Diagonal extraction: recovering the Upsilon series from H or F.
//
// With a -> exp(n h/2) (H) or exp((n-1) h/2) (F) and
// z -> exp(h/2) - exp(-h/2), the coefficient of h^i is a polynomial in n
// of degree <= i. Sampling n = 0..N and interpolating recovers those
// polynomials exactly; the diagonal Sum p_ii h^i is the Upsilon series.

#include "hseries.hpp"
#include "link_diagram.hpp"
#include "mpoly.hpp"
#include "skein.hpp"

#include <vector>

namespace chordweave {

namespace detail {

inline HSeries z_series(int order)
{
    // exp(h/2) - exp(-h/2)
    return HSeries::exp_ch(rat(1, 2), order) -
           HSeries::exp_ch(rat(-1, 2), order);
}

// Dense coefficients (in n) of the interpolating polynomial through
// (node_i, value_i), nodes 0..N.
inline std::vector<Rat> interpolate_integer_nodes(const std::vector<Rat>& values)
{
    std::size_t k = values.size();
    std::vector<Rat> out(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (values[i] == 0)
            continue;
        // Lagrange basis through node i
        std::vector<Rat> poly{Rat(1)};
        Rat denom(1);
        for (std::size_t m = 0; m < k; ++m) {
            if (m == i)
                continue;
            std::vector<Rat> next(poly.size() + 1, Rat(0));
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= Rat(static_cast<long>(m)) * poly[j];
            }
            poly = std::move(next);
            denom *= Rat(static_cast<long>(i) - static_cast<long>(m));
        }
        for (std::size_t j = 0; j < poly.size(); ++j)
            out[j] += values[i] * poly[j] / denom;
    }
    return out;
}

inline HSeries diagonal_of(const MPoly& value, int order, int a_shift)
{
    // Sample the series at n = 0..order.
    std::vector<HSeries> samples;
    samples.reserve(order + 1);
    HSeries z = z_series(order);
    for (int n = 0; n <= order; ++n) {
        std::map<VarId, HSeries> bases = {
            {VarId::a(), HSeries::exp_ch(rat(n - a_shift, 2), order)},
            {VarId::z(), z},
        };
        samples.push_back(series_eval(value, bases, order));
    }

    HSeries diag(order);
    for (int i = 0; i <= order; ++i) {
        std::vector<Rat> values;
        for (int n = 0; n <= order; ++n)
            values.push_back(samples[n][i]);
        std::vector<Rat> poly = interpolate_integer_nodes(values);
        for (std::size_t j = i + 1; j < poly.size(); ++j)
            if (poly[j] != 0)
                throw Error("diagonal extraction: coefficient of h^" +
                            std::to_string(i) + " has degree > " +
                            std::to_string(i) + " in n");
        diag[i] = static_cast<std::size_t>(i) < poly.size() ? poly[i] : Rat(0);
    }
    return diag;
}

} // namespace detail

inline HSeries homfly_diagonal(const LinkDiagram& k, int order)
{
    if (k.component_count() != 1)
        throw Error("diagonal extraction needs a knot");
    if (order < 0 || order > 8)
        throw Error("diagonal order is guarded at 8");
    return detail::diagonal_of(homfly(k), order, 0);
}

inline HSeries kauffman_diagonal(const LinkDiagram& k, int order)
{
    if (k.component_count() != 1)
        throw Error("diagonal extraction needs a knot");
    if (order < 0 || order > 8)
        throw Error("diagonal order is guarded at 8");
    return detail::diagonal_of(kauffman(k), order, 1);
}

// The reference series: Upsilon(K) with y -> exp(h/2).
inline HSeries upsilon_series(const LinkDiagram& k, int order)
{
    return expand_exponential(upsilon(k), {{VarId::y(), rat(1, 2)}}, order);
}

} // namespace chordweave
