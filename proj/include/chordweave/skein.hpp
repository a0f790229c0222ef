#pragma once

// Skein recursions for the knot polynomial Upsilon, the framed Homfly
// polynomial H(a,z) and the Kauffman (Dubrovnik) polynomial F(a,z).
//
// All three use the ordered based descending strategy: walk the components
// from their basepoints; the first crossing first reached on its
// under-strand is switched (moving the diagram strictly closer to
// descending) and smoothed (dropping a crossing). A descending link
// diagram is a split union of unknots whose framings are the self-writhes,
// so it evaluates to delta^(c-1) * prod a^(w_i) with the split-union
// factor delta of the invariant at hand.

#include "hseries.hpp"
#include "link_diagram.hpp"
#include "mpoly.hpp"

#include <optional>
#include <vector>

namespace chordweave {

namespace detail {

inline MPoly upsilon_impl(const LinkDiagram& k,
                          const std::optional<std::vector<int>>& starts)
{
    std::vector<int> order = starts ? *starts : k.default_start_arcs();
    auto bad = k.first_violation(order);
    if (!bad) {
        return MPoly::variable(VarId::y(), k.writhe());
    }
    // Relation (1) at the violating crossing: the oriented smoothing of a
    // knot self-crossing always splits into a 2-component link, and the
    // recursion factors through the two extracted knots.
    MPoly switched = upsilon_impl(k.switch_crossing(bad->crossing), order);
    LinkDiagram smoothed = k.smooth_oriented(bad->crossing);
    MPoly c1 = upsilon_impl(smoothed.extract_component(0), std::nullopt);
    MPoly c2 = upsilon_impl(smoothed.extract_component(1), std::nullopt);
    MPoly band = MPoly::variable(VarId::y()) -
                 MPoly::variable(VarId::y(), -1);
    MPoly correction = band * c1 * c2;
    return bad->sign > 0 ? switched + correction : switched - correction;
}

inline MPoly homfly_delta()
{
    return (MPoly::variable(VarId::a()) - MPoly::variable(VarId::a(), -1)) *
           MPoly::variable(VarId::z(), -1);
}

inline MPoly descending_value(const LinkDiagram& k, const MPoly& delta)
{
    MPoly value = MPoly::constant(1);
    auto comps = k.components();
    for (std::size_t i = 1; i < comps.size(); ++i)
        value *= delta;
    for (const auto& comp : comps)
        value *= MPoly::variable(VarId::a(), k.self_writhe(comp));
    return value;
}

inline MPoly homfly_impl(const LinkDiagram& k)
{
    auto bad = k.first_violation(k.default_start_arcs());
    if (!bad)
        return descending_value(k, homfly_delta());
    MPoly switched = homfly_impl(k.switch_crossing(bad->crossing));
    MPoly smoothed = homfly_impl(k.smooth_oriented(bad->crossing));
    MPoly correction = MPoly::variable(VarId::z()) * smoothed;
    return bad->sign > 0 ? switched + correction : switched - correction;
}

inline MPoly kauffman_impl(const LinkDiagram& k)
{
    auto bad = k.first_violation(k.default_start_arcs());
    if (!bad) {
        MPoly delta_f = homfly_delta() + MPoly::constant(1);
        return descending_value(k, delta_f);
    }
    MPoly switched = kauffman_impl(k.switch_crossing(bad->crossing));
    MPoly oriented = kauffman_impl(k.smooth_oriented(bad->crossing));
    MPoly other = kauffman_impl(k.smooth_disoriented(bad->crossing));
    MPoly correction = MPoly::variable(VarId::z()) * (oriented - other);
    return bad->sign > 0 ? switched + correction : switched - correction;
}

} // namespace detail

// Upsilon(K) in R[y, y^-1]; defined for knots only. The optional start arc
// moves the basepoint (the value must not depend on it).
inline MPoly upsilon(const LinkDiagram& k,
                     std::optional<int> start_arc = std::nullopt)
{
    if (k.component_count() != 1)
        throw Error("upsilon is defined for single-component diagrams");
    std::optional<std::vector<int>> starts;
    if (start_arc)
        starts = std::vector<int>{*start_arc};
    return detail::upsilon_impl(k, starts);
}

// Framed Homfly H(a,z): H(K+) - H(K-) = z H(K_parallel), positive kink a,
// unknot 1, split union factor (a - a^-1)/z.
inline MPoly homfly(const LinkDiagram& k)
{
    MPoly value = detail::homfly_impl(k);
    if (k.component_count() == 1) {
        for (const auto& [m, c] : value.terms())
            if (MPoly::exponent_of(m, VarId::z()) < 0)
                throw Error("homfly: negative z power on a knot value");
    }
    return value;
}

// Kauffman F(a,z) in Dubrovnik form: F(K+) - F(K-) = z(F(K_par) - F(K_=)),
// positive kink a, unknot 1, split union factor (a - a^-1)/z + 1.
inline MPoly kauffman(const LinkDiagram& k)
{
    return detail::kauffman_impl(k);
}

} // namespace chordweave
