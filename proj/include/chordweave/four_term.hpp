#pragma once

// Four-term relation instances. Each quadruple (d1,d2,d3,d4) asserts
// w(d1) - w(d2) - w(d3) + w(d4) = 0 for every weight system w. The gap
// convention is pinned at construction time by checking that the circle
// count weight system annihilates every emitted quadruple.

#include "chord_diagram.hpp"
#include "state_weights.hpp"

#include <array>
#include <set>
#include <vector>

namespace chordweave {

struct FourTermQuadruple {
    std::array<ChordDiagram, 4> d;
};

namespace detail {

// Insert the moving endpoint adjacent to the anchor endpoint of the fixed
// chord. Tokens: 0..m-1 are template points, m is the far endpoint of the
// new chord, m+1 the moving endpoint.
inline ChordDiagram insert_four_term(const ChordDiagram& tmpl, int far_gap,
                                     int anchor, bool before)
{
    int m = tmpl.points();
    std::vector<int> seq;
    seq.reserve(m + 2);
    for (int i = 0; i < m; ++i) {
        if (i == far_gap)
            seq.push_back(m); // far endpoint sits in this gap
        seq.push_back(i);
    }
    // Moving endpoint strictly adjacent to the anchor point.
    std::vector<int> with_m;
    for (int tok : seq) {
        if (tok == anchor && before)
            with_m.push_back(m + 1);
        with_m.push_back(tok);
        if (tok == anchor && !before)
            with_m.push_back(m + 1);
    }
    std::vector<int> pos(m + 2);
    for (int i = 0; i < static_cast<int>(with_m.size()); ++i)
        pos[with_m[i]] = i;
    std::vector<int> pairing(m + 2);
    for (int i = 0; i < m; ++i)
        pairing[pos[i]] = pos[tmpl.partner(i)];
    pairing[pos[m]] = pos[m + 1];
    pairing[pos[m + 1]] = pos[m];
    return ChordDiagram(std::move(pairing));
}

} // namespace detail

// All 4T quadruples of degree n, built from degree n-1 templates: choose a
// chord of the template, a gap for the fixed endpoint of the new chord, and
// let the moving endpoint take the four gaps adjacent to the chosen chord's
// endpoints. Duplicate relation instances are removed.
inline std::vector<FourTermQuadruple> generate_4T(int n)
{
    if (n < 2)
        throw Error("4T relations need degree >= 2");
    if (n > 5)
        throw Error("degree-too-large: 4T generation is guarded at degree 5");

    std::vector<FourTermQuadruple> out;
    std::set<std::array<ChordDiagram, 4>> seen;
    for (const ChordDiagram& tmpl : enumerate_diagrams(n - 1)) {
        int m = tmpl.points();
        for (auto [u1, u2] : tmpl.chords()) {
            for (int gap = 0; gap < m; ++gap) {
                FourTermQuadruple q;
                q.d[0] = detail::insert_four_term(tmpl, gap, u1, true).canonical();
                q.d[1] = detail::insert_four_term(tmpl, gap, u1, false).canonical();
                q.d[2] = detail::insert_four_term(tmpl, gap, u2, false).canonical();
                q.d[3] = detail::insert_four_term(tmpl, gap, u2, true).canonical();

                // Construction-time self check: the circle count weight
                // system must annihilate the relation.
                MPoly probe = w_gl(q.d[0]) - w_gl(q.d[1]) - w_gl(q.d[2]) +
                              w_gl(q.d[3]);
                if (!probe.is_zero())
                    throw Error("4T self-check failed at degree " +
                                std::to_string(n));

                // Orderings representing the same relation instance.
                std::array<ChordDiagram, 4> k0{q.d[0], q.d[1], q.d[2], q.d[3]};
                std::array<ChordDiagram, 4> k1{q.d[1], q.d[0], q.d[3], q.d[2]};
                std::array<ChordDiagram, 4> k2{q.d[2], q.d[3], q.d[0], q.d[1]};
                std::array<ChordDiagram, 4> k3{q.d[3], q.d[2], q.d[1], q.d[0]};
                std::array<ChordDiagram, 4> key =
                    std::min(std::min(k0, k1), std::min(k2, k3));
                if (seen.insert(key).second)
                    out.push_back(std::move(q));
            }
        }
    }
    return out;
}

} // namespace chordweave
