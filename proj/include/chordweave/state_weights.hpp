#pragma once

// Combinatorial state-model weight systems: the top weight system W,
// resolution circle counts, W_gl and W_so, the coloring weight systems
// W_{r,x} / W_{r,f}, the direct-sum polynomials W_{g,r}, and the embedding
// count E = W_{2,1}.

#include "chord_diagram.hpp"
#include "color_table.hpp"
#include "mpoly.hpp"

#include <vector>

namespace chordweave {

enum class Resolution { PRESERVE, REVERSE };

// 0 if two chords intersect, 1 otherwise.
inline Rat w_top(const ChordDiagram& d)
{
    return has_crossing(d) ? Rat(0) : Rat(1);
}

// Number of closed curves after replacing every chord by its chosen band
// resolution. Traversal runs on 4n directed arc states (arc index,
// direction); a REVERSE chord flips the traversal direction, so undirected
// circles are each covered by two directed cycles and the final count is
// directed cycles / 2. With every chord PRESERVE this equals the cycle
// count of i -> tau(i+1).
inline int circle_count(const ChordDiagram& d,
                        const std::vector<Resolution>& res)
{
    int n = d.degree();
    if (static_cast<int>(res.size()) != n)
        throw Error("resolution choice must cover every chord");
    if (n == 0)
        return 1;

    int m = 2 * n;
    std::vector<int> chord_of(m);
    auto ch = d.chords();
    for (int k = 0; k < n; ++k) {
        chord_of[ch[k].first] = k;
        chord_of[ch[k].second] = k;
    }

    // State encoding: arc a in {0..m-1}, direction +/- -> 2*a + (dir<0).
    // Arc a spans endpoints a and a+1 (mod m).
    auto step = [&](int state) {
        int arc = state / 2;
        bool ccw = (state % 2) == 0;
        int endpoint = ccw ? (arc + 1) % m : arc;
        int j = d.partner(endpoint);
        bool preserve = res[chord_of[endpoint]] == Resolution::PRESERVE;
        bool out_ccw = ccw == preserve;
        int out_arc = out_ccw ? j : (j - 1 + m) % m;
        return 2 * out_arc + (out_ccw ? 0 : 1);
    };

    std::vector<char> seen(2 * m, 0);
    int cycles = 0;
    for (int s0 = 0; s0 < 2 * m; ++s0) {
        if (seen[s0])
            continue;
        ++cycles;
        int s = s0;
        while (!seen[s]) {
            seen[s] = 1;
            s = step(s);
        }
    }
    return cycles / 2;
}

inline int circle_count_all_preserve(const ChordDiagram& d)
{
    return circle_count(
        d, std::vector<Resolution>(d.degree(), Resolution::PRESERVE));
}

// W_gl(D) = t^(c(D)-1) with c the all-PRESERVE circle count.
inline MPoly w_gl(const ChordDiagram& d)
{
    return MPoly::variable(VarId::t(), circle_count_all_preserve(d) - 1);
}

// W_so(D) = sum over chord subsets S of (-1)^|S| t^(c_S - 1), where chords
// in S take the orientation-reversing resolution.
inline MPoly w_so(const ChordDiagram& d)
{
    int n = d.degree();
    MPoly out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Resolution> res(n, Resolution::PRESERVE);
        int popcount = 0;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                res[k] = Resolution::REVERSE;
                ++popcount;
            }
        int c = circle_count(d, res);
        MPoly term = MPoly::variable(VarId::t(), c - 1);
        out += popcount % 2 == 0 ? term : -term;
    }
    return out;
}

// W_{r,x}(D): sum over chord colorings whose color classes are pairwise
// non-crossing of x_1^|class 1| ... x_r^|class r|. Evaluated directly on
// the diagram; the graph-coloring route lives in chromatic.hpp.
inline MPoly w_rx(const ChordDiagram& d, int r)
{
    if (r < 1)
        throw Error("w_rx needs r >= 1");
    auto ch = d.chords();
    int n = d.degree();
    MPoly out;
    std::vector<int> assign(n, 0);
    while (true) {
        bool admissible = true;
        for (int i = 0; i < n && admissible; ++i)
            for (int j = i + 1; j < n && admissible; ++j)
                if (assign[i] == assign[j] && chords_cross(ch[i], ch[j]))
                    admissible = false;
        if (admissible) {
            Monomial m;
            std::vector<int> count(r, 0);
            for (int k = 0; k < n; ++k)
                ++count[assign[k]];
            for (int color = 0; color < r; ++color)
                if (count[color] > 0)
                    m.emplace_back(VarId::x(color + 1), count[color]);
            out.add_term(m, Rat(1));
        }
        int pos = n - 1;
        while (pos >= 0 && assign[pos] == r - 1)
            assign[pos--] = 0;
        if (pos < 0)
            break;
        ++assign[pos];
    }
    return out;
}

// W_{r,f}(D), evaluated along both routes the construction provides:
// the Delta_r expansion with W on each subdiagram, and the coloring sum
// over the intersection graph. The two must agree; a mismatch means an
// implementation bug, not bad input.
inline Rat w_rf(const ChordDiagram& d, const ColorWeightTable& tbl)
{
    int r = tbl.colors();

    Rat via_delta(0);
    for (const ChordColoring& col : chord_colorings(d, r)) {
        Rat term(1);
        for (int i = 0; i < r; ++i) {
            term *= tbl(i, col.classes[i].degree());
            term *= w_top(col.classes[i]);
            if (term == 0)
                break;
        }
        via_delta += term;
    }

    Rat via_colorings(0);
    {
        auto ch = d.chords();
        int n = d.degree();
        std::vector<int> assign(n, 0);
        while (true) {
            bool proper = true;
            for (int i = 0; i < n && proper; ++i)
                for (int j = i + 1; j < n && proper; ++j)
                    if (assign[i] == assign[j] && chords_cross(ch[i], ch[j]))
                        proper = false;
            if (proper) {
                std::vector<int> count(r, 0);
                for (int k = 0; k < n; ++k)
                    ++count[assign[k]];
                Rat term(1);
                for (int i = 0; i < r; ++i)
                    term *= tbl(i, count[i]);
                via_colorings += term;
            }
            int pos = n - 1;
            while (pos >= 0 && assign[pos] == r - 1)
                assign[pos--] = 0;
            if (pos < 0)
                break;
            ++assign[pos];
        }
    }

    if (via_delta != via_colorings)
        throw Error("w_rf internal consistency failure on " + d.word());
    return via_delta;
}

// E(D) = W_{2,1}(D): 0 unless the intersection graph is bipartite, else
// 2^(number of connected components).
inline Rat w21_embeddings(const ChordDiagram& d)
{
    WeightedGraph g = intersection_graph(d);
    if (!g.is_bipartite())
        return Rat(0);
    Rat out(1);
    for (int i = 0; i < g.component_count(); ++i)
        out *= 2;
    return out;
}

enum class LieFamily { GL, SO };

// W_{g,r}(D): sum over chord colorings of
// prod_i x_i^(deg D_i) * w_g(D_i)(t), the t-powers multiplying.
inline MPoly w_gr(const ChordDiagram& d, LieFamily family, int r)
{
    if (r < 1)
        throw Error("w_gr needs r >= 1");
    MPoly out;
    for (const ChordColoring& col : chord_colorings(d, r)) {
        MPoly term = MPoly::constant(1);
        for (int i = 0; i < r; ++i) {
            const ChordDiagram& di = col.classes[i];
            if (di.degree() > 0)
                term *= MPoly::variable(VarId::x(i + 1), di.degree());
            term *= family == LieFamily::GL ? w_gl(di) : w_so(di);
        }
        out += term;
    }
    return out;
}

} // namespace chordweave
