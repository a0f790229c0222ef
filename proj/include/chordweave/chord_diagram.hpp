#pragma once

// Chord diagrams as fixed-point-free involutions on 2n circle points.
// Equivalence is rotation of the endpoint labels only; the circle keeps its
// orientation, so no reflections. Canonical form is the lexicographic
// minimum over all rotations.

#include "rational.hpp"
#include "util.hpp"
#include "weighted_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace chordweave {

class ChordDiagram {
public:
    // Bare circle
    ChordDiagram() = default;

    explicit ChordDiagram(std::vector<int> pairing) : pair_(std::move(pairing))
    {
        validate();
    }

    int degree() const { return static_cast<int>(pair_.size()) / 2; }
    int points() const { return static_cast<int>(pair_.size()); }
    int partner(int i) const { return pair_.at(i); }
    const std::vector<int>& pairing() const { return pair_; }

    // Chords as endpoint pairs (i, j) with i < j, sorted by i.
    std::vector<std::pair<int, int>> chords() const
    {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < points(); ++i)
            if (i < pair_[i])
                out.emplace_back(i, pair_[i]);
        return out;
    }

    ChordDiagram rotate(int k) const
    {
        int m = points();
        if (m == 0)
            return *this;
        k = ((k % m) + m) % m;
        std::vector<int> p(m);
        for (int i = 0; i < m; ++i)
            p[i] = ((pair_[(i + k) % m] - k) % m + m) % m;
        return ChordDiagram(std::move(p));
    }

    ChordDiagram canonical() const
    {
        int m = points();
        if (m == 0)
            return *this;
        ChordDiagram best = *this;
        for (int k = 1; k < m; ++k) {
            ChordDiagram cand = rotate(k);
            if (cand.pair_ < best.pair_)
                best = cand;
        }
        return best;
    }

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

    friend bool operator<(const ChordDiagram& d1, const ChordDiagram& d2)
    {
        if (d1.points() != d2.points())
            return d1.points() < d2.points();
        return d1.pair_ < d2.pair_;
    }

    // Double-occurrence word with first-occurrence labels 1-9 then a-z;
    // the bare circle renders as "o".
    std::string word() const
    {
        if (points() == 0)
            return "o";
        static const char alphabet[] = "123456789abcdefghijklmnopqrstuvwxyz";
        std::vector<int> label(points(), -1);
        int next = 0;
        std::string out;
        for (int i = 0; i < points(); ++i) {
            if (label[i] == -1) {
                if (next >= static_cast<int>(sizeof(alphabet)) - 1)
                    throw Error("diagram too large to render as a word");
                label[i] = next;
                label[pair_[i]] = next;
                ++next;
            }
            out += alphabet[label[i]];
        }
        return out;
    }

    static ChordDiagram from_word(const std::string& w)
    {
        if (w == "o" || w.empty())
            return ChordDiagram();
        std::map<char, std::vector<int>> where;
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            where[w[i]].push_back(i);
        std::vector<int> p(w.size());
        for (const auto& [ch, pos] : where) {
            if (pos.size() != 2)
                throw Error(std::string("label '") + ch +
                            "' must occur exactly twice");
            p[pos[0]] = pos[1];
            p[pos[1]] = pos[0];
        }
        return ChordDiagram(std::move(p));
    }

private:
    void validate() const
    {
        int m = points();
        if (m % 2 != 0)
            throw Error("odd point count");
        for (int i = 0; i < m; ++i) {
            if (pair_[i] < 0 || pair_[i] >= m || pair_[i] == i ||
                pair_[pair_[i]] != i)
                throw Error("pairing is not a fixed-point-free involution");
        }
    }

    std::vector<int> pair_;
};

// Chords a = (a1,a2), b = (b1,b2) intersect iff their endpoints alternate
// around the circle.
inline bool chords_cross(std::pair<int, int> a, std::pair<int, int> b)
{
    auto inside = [&a](int x) { return a.first < x && x < a.second; };
    return inside(b.first) != inside(b.second);
}

inline bool has_crossing(const ChordDiagram& d)
{
    auto ch = d.chords();
    for (std::size_t i = 0; i < ch.size(); ++i)
        for (std::size_t j = i + 1; j < ch.size(); ++j)
            if (chords_cross(ch[i], ch[j]))
                return true;
    return false;
}

// One weight-1 vertex per chord; edges between crossing chords.
inline WeightedGraph intersection_graph(const ChordDiagram& d)
{
    auto ch = d.chords();
    WeightedGraph g(std::vector<int>(ch.size(), 1));
    for (std::size_t i = 0; i < ch.size(); ++i)
        for (std::size_t j = i + 1; j < ch.size(); ++j)
            if (chords_cross(ch[i], ch[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

// All canonical diagrams of the given degree, deduplicated from the
// (2n-1)!! involutions; deterministic ascending order.
inline std::vector<ChordDiagram> enumerate_diagrams(int n)
{
    if (n < 0)
        throw Error("degree must be >= 0");
    if (n > 6)
        throw Error("degree-too-large: enumeration is guarded at degree 6");
    if (n == 0)
        return {ChordDiagram()};

    std::set<ChordDiagram> seen;
    std::vector<int> p(2 * n, -1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == 2 * n) {
            seen.insert(ChordDiagram(p).canonical());
            return;
        }
        if (p[i] != -1) {
            self(self, i + 1);
            return;
        }
        for (int j = i + 1; j < 2 * n; ++j) {
            if (p[j] != -1)
                continue;
            p[i] = j;
            p[j] = i;
            self(self, i + 1);
            p[i] = -1;
            p[j] = -1;
        }
    };
    rec(rec, 0);
    return std::vector<ChordDiagram>(seen.begin(), seen.end());
}

// Glue two diagrams, cutting each circle at a gap. Gap g lies immediately
// before point g; the bare circle has the single gap 0.
inline ChordDiagram connected_sum(const ChordDiagram& d1, int cut1,
                                  const ChordDiagram& d2, int cut2)
{
    auto check_gap = [](const ChordDiagram& d, int cut) {
        int gaps = d.points() == 0 ? 1 : d.points();
        if (cut < 0 || cut >= gaps)
            throw Error("invalid gap index " + std::to_string(cut));
    };
    check_gap(d1, cut1);
    check_gap(d2, cut2);

    int m1 = d1.points(), m2 = d2.points();
    std::vector<int> p(m1 + m2);
    // Points of d1 starting at cut1, then points of d2 starting at cut2.
    auto place1 = [&](int old_pt) { return ((old_pt - cut1) % m1 + m1) % m1; };
    auto place2 = [&](int old_pt) {
        return m1 + ((old_pt - cut2) % m2 + m2) % m2;
    };
    for (int i = 0; i < m1; ++i)
        p[place1(i)] = place1(d1.partner(i));
    for (int i = 0; i < m2; ++i)
        p[place2(i)] = place2(d2.partner(i));
    return ChordDiagram(std::move(p));
}

inline ChordDiagram connected_sum(const ChordDiagram& d1, const ChordDiagram& d2)
{
    return connected_sum(d1, 0, d2, 0);
}

// Subdiagram on a subset of chords, endpoints kept in circular order.
inline ChordDiagram subdiagram(const ChordDiagram& d,
                               const std::vector<int>& chord_subset_mask)
{
    auto ch = d.chords();
    std::vector<int> keep_point(d.points(), 0);
    for (std::size_t k = 0; k < ch.size(); ++k) {
        if (chord_subset_mask[k]) {
            keep_point[ch[k].first] = 1;
            keep_point[ch[k].second] = 1;
        }
    }
    std::vector<int> new_index(d.points(), -1);
    int next = 0;
    for (int i = 0; i < d.points(); ++i)
        if (keep_point[i])
            new_index[i] = next++;
    std::vector<int> p(next);
    for (int i = 0; i < d.points(); ++i)
        if (keep_point[i])
            p[new_index[i]] = new_index[d.partner(i)];
    return ChordDiagram(std::move(p));
}

struct ChordColoring {
    std::vector<int> assignment;        // chord index -> color 0..r-1
    std::vector<ChordDiagram> classes;  // subdiagram per color
};

// All r^n functions chords -> {1..r}, with the induced subdiagrams.
inline std::vector<ChordColoring> chord_colorings(const ChordDiagram& d, int r)
{
    if (r < 1)
        throw Error("coloring needs r >= 1");
    int n = d.degree();
    std::vector<ChordColoring> out;
    std::vector<int> assign(n, 0);
    while (true) {
        ChordColoring col;
        col.assignment = assign;
        for (int color = 0; color < r; ++color) {
            std::vector<int> mask(n, 0);
            for (int k = 0; k < n; ++k)
                if (assign[k] == color)
                    mask[k] = 1;
            col.classes.push_back(subdiagram(d, mask));
        }
        out.push_back(std::move(col));
        int pos = n - 1;
        while (pos >= 0 && assign[pos] == r - 1)
            assign[pos--] = 0;
        if (pos < 0)
            break;
        ++assign[pos];
    }
    return out;
}

// Formal linear combination of canonical diagrams.
class DiagramSum {
public:
    DiagramSum() = default;

    explicit DiagramSum(const ChordDiagram& d, const Rat& c = Rat(1))
    {
        add(d, c);
    }

    void add(const ChordDiagram& d, const Rat& c)
    {
        if (c == 0)
            return;
        ChordDiagram key = d.canonical();
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const std::map<ChordDiagram, Rat>& terms() const { return terms_; }

    friend DiagramSum operator+(DiagramSum s1, const DiagramSum& s2)
    {
        for (const auto& [d, c] : s2.terms_)
            s1.add(d, c);
        return s1;
    }

private:
    std::map<ChordDiagram, Rat> terms_;
};

// Coefficient of the bare circle.
inline Rat counit(const DiagramSum& s)
{
    auto it = s.terms().find(ChordDiagram());
    return it == s.terms().end() ? Rat(0) : it->second;
}

} // namespace chordweave
