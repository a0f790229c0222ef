#pragma once

// The chromatic algebra: deletion-contraction reduction of weighted graphs
// to Q[s1,s2,...], proper-coloring weight systems, and the universal
// chromatic weight system gamma_bar.

#include "chord_diagram.hpp"
#include "color_table.hpp"
#include "mpoly.hpp"
#include "power_sums.hpp"
#include "state_weights.hpp"
#include "weighted_graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chordweave {

// Memoized deletion-contraction. The memo is keyed by the canonical label,
// so isomorphic subproblems are shared; a fresh reducer per computation
// keeps results deterministic under any concurrency.
class ChromaticReducer {
public:
    ChromaticReducer() = default;

    explicit ChromaticReducer(std::optional<FileCache> disk)
        : disk_(std::move(disk))
    {
    }

    MPoly reduce(const WeightedGraph& g)
    {
        CanonicalLabel label = canonical_label(g);
        auto it = memo_.find(label.key);
        if (it != memo_.end())
            return it->second;
        if (disk_) {
            if (auto hit = disk_->get(label.key)) {
                MPoly p = MPoly::parse(*hit);
                memo_.emplace(label.key, p);
                return p;
            }
        }

        MPoly result;
        if (g.edges().empty()) {
            result = MPoly::constant(1);
            for (int v = 0; v < g.vertex_count(); ++v)
                result *= MPoly::variable(
                    VarId::s(static_cast<std::uint32_t>(g.weight(v))));
        } else {
            // Designated edge: lexicographically smallest under the
            // canonical labeling. The chromatic relations make the result
            // independent of this choice; the test suite verifies that.
            std::vector<int> slot(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i)
                slot[label.order[i]] = i;
            Edge best = g.edges().front();
            std::pair<int, int> best_key{g.vertex_count(), g.vertex_count()};
            for (const Edge& e : g.edges()) {
                std::pair<int, int> key{std::min(slot[e.u], slot[e.v]),
                                        std::max(slot[e.u], slot[e.v])};
                if (key < best_key) {
                    best_key = key;
                    best = e;
                }
            }
            result = reduce(g.delete_edge(best)) -
                     reduce(g.contract_edge(best));
        }

        memo_.emplace(label.key, result);
        if (disk_)
            disk_->put(label.key, result.render());
        return result;
    }

private:
    std::map<std::string, MPoly> memo_;
    std::optional<FileCache> disk_;
};

// Image of g in C = Q[s1,s2,...].
inline MPoly reduce(const WeightedGraph& g)
{
    ChromaticReducer r;
    return r.reduce(g);
}

// Universal chromatic weight system: reduce the unit-weighted
// intersection graph.
inline MPoly gamma_bar(const ChordDiagram& d)
{
    ChromaticReducer r;
    return r.reduce(intersection_graph(d));
}

// All proper colorings vertices -> {0..r-1}; the empty graph has exactly
// one (empty) coloring.
inline std::vector<std::vector<int>> proper_colorings(const WeightedGraph& g,
                                                      int r)
{
    if (r < 0)
        throw Error("color count must be >= 0");
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (r == 0)
        return out;
    auto adj = g.adjacency();
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(color);
            return;
        }
        for (int c = 0; c < r; ++c) {
            bool ok = true;
            for (int u : adj[v])
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            self(self, v + 1);
            color[v] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

// Sum over proper colorings of prod_i f_i(total weight of color class i).
inline Rat wbar_rf(const WeightedGraph& g, const ColorWeightTable& tbl)
{
    int r = tbl.colors();
    Rat out(0);
    for (const auto& coloring : proper_colorings(g, r)) {
        std::vector<int> class_weight(r, 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            class_weight[coloring[v]] += g.weight(v);
        Rat term(1);
        for (int i = 0; i < r; ++i)
            term *= tbl(i, class_weight[i]);
        out += term;
    }
    return out;
}

// wbar_rf with f_i(k) = x_i^k: a symmetric polynomial in x1..xr.
inline MPoly wbar_rx(const WeightedGraph& g, int r)
{
    if (r < 1)
        throw Error("wbar_rx needs r >= 1");
    MPoly out;
    for (const auto& coloring : proper_colorings(g, r)) {
        std::vector<int> class_weight(r, 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            class_weight[coloring[v]] += g.weight(v);
        Monomial m;
        for (int i = 0; i < r; ++i)
            if (class_weight[i] > 0)
                m.emplace_back(VarId::x(i + 1), class_weight[i]);
        out.add_term(m, Rat(1));
    }
    return out;
}

// Inverse direction of the r-color evaluation: compute W_{r,x}(D) with
// r = deg D, decompose into power sums, and rename G(k) -> s(k).
inline MPoly chromatic_from_wrx(const ChordDiagram& d)
{
    int r = d.degree();
    if (r < 1)
        throw Error("chromatic_from_wrx needs degree >= 1");
    MPoly decomposed = power_sum_decompose(w_rx(d, r), r);
    std::map<VarId, MPoly> rename;
    for (VarId v : decomposed.vars())
        if (v.family == VarFamily::G)
            rename[v] = MPoly::variable(VarId::s(v.index));
    return decomposed.substitute(rename);
}

} // namespace chordweave
