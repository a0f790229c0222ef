#pragma once

// Oriented PD-coded link diagrams with blackboard framing.
//
// Each crossing stores its four arc labels in counterclockwise dart order
// (dart p sits at position p; the strand through dart p continues at dart
// p+2 mod 4). Axis 0 is the dart pair {0,2}, axis 1 is {1,3}; over_axis
// says which strand passes on top. Orientation is stored as the incoming
// dart of each axis. PD input "X[a,b,c,d]" lists arcs counterclockwise
// from the incoming under-strand, so axis 1 starts as the over strand and
// dart 0 as the incoming under dart; over-strand directions are solved
// from global consistency.

#include "rational.hpp"
#include "util.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace chordweave {

struct Dart {
    int crossing = -1;
    int pos = 0; // 0..3

    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Crossing {
    std::array<int, 4> arc{};
    int over_axis = 1; // axis {1,3} over by PD convention
    int in0 = 0;       // incoming dart on axis 0 (0 or 2)
    int in1 = 1;       // incoming dart on axis 1 (1 or 3)

    bool incoming(int pos) const { return pos == in0 || pos == in1; }
    int under_axis() const { return 1 - over_axis; }

    int sign() const
    {
        int u_in = over_axis == 0 ? in1 : in0;
        int o_in = over_axis == 0 ? in0 : in1;
        return ((o_in - u_in) % 4 + 4) % 4 == 3 ? +1 : -1;
    }
};

class LinkDiagram {
public:
    LinkDiagram() = default;

    LinkDiagram(std::vector<Crossing> crossings, int free_loops)
        : cross_(std::move(crossings)), free_loops_(free_loops)
    {
        validate();
    }

    static LinkDiagram unknot() { return LinkDiagram({}, 1); }

    const std::vector<Crossing>& crossings() const { return cross_; }
    int crossing_count() const { return static_cast<int>(cross_.size()); }
    int free_loops() const { return free_loops_; }

    int writhe() const
    {
        int w = 0;
        for (const Crossing& c : cross_)
            w += c.sign();
        return w;
    }

    // The dart where this arc flows into a crossing.
    Dart head_of(int arc) const
    {
        for (int ci = 0; ci < crossing_count(); ++ci)
            for (int p = 0; p < 4; ++p)
                if (cross_[ci].arc[p] == arc && cross_[ci].incoming(p))
                    return {ci, p};
        throw Error("dangling-arc: no head for arc " + std::to_string(arc));
    }

    int next_arc(int arc) const
    {
        Dart h = head_of(arc);
        return cross_[h.crossing].arc[(h.pos + 2) % 4];
    }

    struct Component {
        std::vector<int> arcs; // traversal order from the smallest arc
        bool free_loop = false;
    };

    std::vector<Component> components() const
    {
        std::vector<Component> out;
        std::set<int> all_arcs;
        for (const Crossing& c : cross_)
            for (int p = 0; p < 4; ++p)
                all_arcs.insert(c.arc[p]);
        std::set<int> seen;
        for (int start : all_arcs) {
            if (seen.count(start))
                continue;
            Component comp;
            int cur = start;
            do {
                comp.arcs.push_back(cur);
                seen.insert(cur);
                cur = next_arc(cur);
            } while (cur != start);
            out.push_back(std::move(comp));
        }
        for (int i = 0; i < free_loops_; ++i) {
            Component comp;
            comp.free_loop = true;
            out.push_back(std::move(comp));
        }
        return out;
    }

    int component_count() const { return static_cast<int>(components().size()); }

    // Signed crossing count over crossings both of whose strands lie in
    // the component; mixed crossings contribute to linking, not framing.
    int self_writhe(const Component& comp) const
    {
        if (comp.free_loop)
            return 0;
        std::set<int> arcs(comp.arcs.begin(), comp.arcs.end());
        int w = 0;
        for (const Crossing& c : cross_)
            if (arcs.count(c.arc[0]) && arcs.count(c.arc[1]))
                w += c.sign();
        return w;
    }

    LinkDiagram switch_crossing(int index) const
    {
        LinkDiagram out(*this);
        out.at(index).over_axis ^= 1;
        return out;
    }

    LinkDiagram mirror() const
    {
        LinkDiagram out(*this);
        for (Crossing& c : out.cross_)
            c.over_axis ^= 1;
        return out;
    }

    // Orientation-respecting smoothing: the crossing disappears and each
    // incoming strand continues into the outgoing strand on its side.
    LinkDiagram smooth_oriented(int index) const
    {
        const Crossing& c = at(index);
        // Of the two planar reconnections {{0,1},{2,3}} and {{1,2},{3,0}},
        // the oriented one avoids joining the two incoming darts.
        bool in_adjacent_01 =
            (c.incoming(0) && c.incoming(1)) || (c.incoming(2) && c.incoming(3));
        std::array<std::array<int, 2>, 2> pairs =
            in_adjacent_01
                ? std::array<std::array<int, 2>, 2>{{{1, 2}, {3, 0}}}
                : std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}};
        return smooth_impl(index, pairs, false);
    }

    // The other reconnection; orientations on the merged strand are then
    // rebuilt from scratch (only the unoriented Kauffman engine uses this).
    LinkDiagram smooth_disoriented(int index) const
    {
        const Crossing& c = at(index);
        bool in_adjacent_01 =
            (c.incoming(0) && c.incoming(1)) || (c.incoming(2) && c.incoming(3));
        std::array<std::array<int, 2>, 2> pairs =
            in_adjacent_01
                ? std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}}
                : std::array<std::array<int, 2>, 2>{{{1, 2}, {3, 0}}};
        return smooth_impl(index, pairs, true);
    }

    // The chosen component as a standalone diagram: other components'
    // strands are deleted and mixed crossings erased.
    LinkDiagram extract_component(int comp_index) const
    {
        auto comps = components();
        if (comp_index < 0 || comp_index >= static_cast<int>(comps.size()))
            throw Error("invalid component index");
        const Component& comp = comps[comp_index];
        if (comp.free_loop)
            return unknot();
        std::set<int> keep(comp.arcs.begin(), comp.arcs.end());

        UnionFind uf;
        int loops = 0;
        std::vector<Crossing> kept;
        for (const Crossing& c : cross_) {
            bool axis0_in = keep.count(c.arc[0]) > 0;
            bool axis1_in = keep.count(c.arc[1]) > 0;
            if (axis0_in && axis1_in) {
                kept.push_back(c);
            } else if (axis0_in || axis1_in) {
                int in_dart = axis0_in ? c.in0 : c.in1;
                int out_dart = (in_dart + 2) % 4;
                uf.join(c.arc[in_dart], c.arc[out_dart], loops);
            }
        }
        for (Crossing& c : kept)
            for (int p = 0; p < 4; ++p)
                c.arc[p] = uf.find(c.arc[p]);
        return LinkDiagram(std::move(kept), loops);
    }

    struct Violation {
        int crossing;
        int sign;
    };

    // Walks the components in the given order from the given starting
    // arcs; returns the first crossing whose first visit arrives on the
    // under-strand, or nothing if the diagram is descending.
    std::optional<Violation> first_violation(
        const std::vector<int>& start_arcs) const
    {
        std::vector<char> visited(cross_.size(), 0);
        for (int start : start_arcs) {
            int cur = start;
            do {
                Dart h = head_of(cur);
                const Crossing& c = cross_[h.crossing];
                if (!visited[h.crossing]) {
                    if (h.pos % 2 == c.under_axis())
                        return Violation{h.crossing, c.sign()};
                    visited[h.crossing] = 1;
                }
                cur = c.arc[(h.pos + 2) % 4];
            } while (cur != start);
        }
        return std::nullopt;
    }

    // Default traversal policy: components ordered by their smallest arc,
    // each started at its smallest arc.
    std::vector<int> default_start_arcs() const
    {
        std::vector<int> starts;
        for (const Component& comp : components())
            if (!comp.free_loop)
                starts.push_back(comp.arcs.front());
        return starts;
    }

    std::string render() const
    {
        std::ostringstream out;
        for (const Crossing& c : cross_) {
            out << "X[" << c.arc[0] << "," << c.arc[1] << "," << c.arc[2]
                << "," << c.arc[3] << "]"
                << (c.over_axis == 1 ? "" : "*") << " ";
        }
        for (int i = 0; i < free_loops_; ++i)
            out << "O ";
        return out.str();
    }

    // Standard PD text: each crossing listed counterclockwise from its
    // incoming under dart; free loops as "O" lines.
    std::string pd_code() const
    {
        std::ostringstream out;
        for (const Crossing& c : cross_) {
            int u_in = c.over_axis == 0 ? c.in1 : c.in0;
            out << "X[" << c.arc[u_in] << "," << c.arc[(u_in + 1) % 4] << ","
                << c.arc[(u_in + 2) % 4] << "," << c.arc[(u_in + 3) % 4]
                << "]\n";
        }
        for (int i = 0; i < free_loops_; ++i)
            out << "O\n";
        return out.str();
    }

private:
    struct UnionFind {
        std::map<int, int> parent;

        int find(int x)
        {
            if (!parent.count(x))
                parent[x] = x;
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        }

        void join(int a, int b, int& loops)
        {
            int ra = find(a), rb = find(b);
            if (ra == rb) {
                ++loops;
                return;
            }
            parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    };

    Crossing& at(int index)
    {
        if (index < 0 || index >= crossing_count())
            throw Error("missing crossing " + std::to_string(index));
        return cross_[index];
    }

    const Crossing& at(int index) const
    {
        if (index < 0 || index >= crossing_count())
            throw Error("missing crossing " + std::to_string(index));
        return cross_[index];
    }

    LinkDiagram smooth_impl(int index,
                            const std::array<std::array<int, 2>, 2>& pairs,
                            bool repair) const
    {
        const Crossing& c = at(index);
        UnionFind uf;
        int loops = free_loops_;
        for (const auto& [p, q] : pairs)
            uf.join(c.arc[p], c.arc[q], loops);
        std::vector<Crossing> kept;
        kept.reserve(cross_.size() - 1);
        for (int ci = 0; ci < crossing_count(); ++ci) {
            if (ci == index)
                continue;
            Crossing k = cross_[ci];
            for (int p = 0; p < 4; ++p)
                k.arc[p] = uf.find(k.arc[p]);
            kept.push_back(k);
        }
        LinkDiagram out;
        out.cross_ = std::move(kept);
        out.free_loops_ = loops;
        if (repair)
            out.repair_orientation();
        out.validate();
        return out;
    }

    // Reassigns a consistent direction to every strand, keeping over/under
    // data. Directions are chosen deterministically per component.
    void repair_orientation()
    {
        std::set<Dart> entered;
        std::map<int, std::vector<Dart>> darts_of;
        for (int ci = 0; ci < crossing_count(); ++ci)
            for (int p = 0; p < 4; ++p)
                darts_of[cross_[ci].arc[p]].push_back({ci, p});

        std::set<int> oriented_arcs;
        for (const auto& [arc, darts] : darts_of) {
            if (oriented_arcs.count(arc))
                continue;
            // Flow the arc into its smallest dart, then walk the strand.
            Dart entry = *std::min_element(darts.begin(), darts.end());
            int cur_arc = arc;
            Dart cur_entry = entry;
            do {
                oriented_arcs.insert(cur_arc);
                Crossing& c = cross_[cur_entry.crossing];
                if (cur_entry.pos % 2 == 0)
                    c.in0 = cur_entry.pos;
                else
                    c.in1 = cur_entry.pos;
                int exit_pos = (cur_entry.pos + 2) % 4;
                int next = c.arc[exit_pos];
                // Entry of the next crossing: the other occurrence of next.
                const auto& occ = darts_of.at(next);
                Dart exit_dart{cur_entry.crossing, exit_pos};
                cur_entry = occ[0] == exit_dart ? occ[1] : occ[0];
                cur_arc = next;
            } while (cur_arc != arc || !(cur_entry == entry));
        }
    }

    void validate() const
    {
        std::map<int, int> occurrences;
        for (const Crossing& c : cross_) {
            for (int p = 0; p < 4; ++p)
                ++occurrences[c.arc[p]];
            if (c.in0 != 0 && c.in0 != 2)
                throw Error("bad axis-0 orientation");
            if (c.in1 != 1 && c.in1 != 3)
                throw Error("bad axis-1 orientation");
        }
        for (const auto& [arc, count] : occurrences)
            if (count != 2)
                throw Error("dangling-arc: arc " + std::to_string(arc) +
                            " occurs " + std::to_string(count) + " times");
        // Every arc needs one head and one tail.
        std::map<int, int> heads;
        for (const Crossing& c : cross_)
            for (int p = 0; p < 4; ++p)
                if (c.incoming(p))
                    ++heads[c.arc[p]];
        for (const auto& [arc, count] : occurrences)
            if (heads[arc] != 1)
                throw Error("inconsistent-orientation: arc " +
                            std::to_string(arc));
    }

    std::vector<Crossing> cross_;
    int free_loops_ = 0;

    friend LinkDiagram parse_pd(const std::string&);
    friend LinkDiagram connected_sum_knots(const LinkDiagram&,
                                           const LinkDiagram&);
};

inline LinkDiagram parse_pd(const std::string& text)
{
    std::vector<Crossing> crossings;
    int free_loops = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::string trimmed;
        for (char ch : line) {
            if (ch == '#')
                break;
            trimmed += ch;
        }
        // collapse whitespace
        std::string compact;
        for (char ch : trimmed)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                compact += ch;
        if (compact.empty())
            continue;
        if (compact == "O") {
            ++free_loops;
            continue;
        }
        if (compact.size() < 2 || compact[0] != 'X' || compact[1] != '[' ||
            compact.back() != ']')
            throw Error("malformed-input: expected X[a,b,c,d], got '" + line +
                        "'");
        std::string body = compact.substr(2, compact.size() - 3);
        std::array<int, 4> arcs{};
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) {
            std::size_t comma = body.find(',', pos);
            std::string field = comma == std::string::npos
                                    ? body.substr(pos)
                                    : body.substr(pos, comma - pos);
            if (field.empty() ||
                field.find_first_not_of("0123456789") != std::string::npos)
                throw Error("malformed-input: bad arc label in '" + line + "'");
            long value = std::stol(field);
            if (value <= 0)
                throw Error("malformed-input: arc labels must be positive");
            arcs[i] = static_cast<int>(value);
            pos = comma == std::string::npos ? body.size() : comma + 1;
            if (i < 3 && comma == std::string::npos)
                throw Error("malformed-input: expected four arc labels in '" +
                            line + "'");
        }
        Crossing c;
        c.arc = arcs;
        c.over_axis = 1;
        c.in0 = 0;
        crossings.push_back(c);
    }

    // Solve the over-strand directions. Variables: per dart, "incoming".
    // Constraints: the two darts of an arc have opposite roles, and the
    // two darts of an axis have opposite roles. Axis-0 roles are fixed by
    // the PD convention.
    std::map<int, std::vector<Dart>> darts_of;
    for (int ci = 0; ci < static_cast<int>(crossings.size()); ++ci)
        for (int p = 0; p < 4; ++p)
            darts_of[crossings[ci].arc[p]].push_back({ci, p});
    for (const auto& [arc, darts] : darts_of)
        if (darts.size() != 2)
            throw Error("dangling-arc: arc " + std::to_string(arc) +
                        " occurs " + std::to_string(darts.size()) + " times");

    auto dart_id = [](const Dart& d) { return 4 * d.crossing + d.pos; };
    std::vector<int> role(4 * crossings.size(), -1); // 1 incoming, 0 outgoing

    auto partner_darts = [&](const Dart& d) {
        std::vector<Dart> out;
        // axis mate
        out.push_back({d.crossing, (d.pos + 2) % 4});
        // arc mate
        const auto& occ = darts_of.at(crossings[d.crossing].arc[d.pos]);
        out.push_back(occ[0] == d ? occ[1] : occ[0]);
        return out;
    };

    auto propagate = [&](Dart seed, int value) {
        std::vector<std::pair<Dart, int>> stack{{seed, value}};
        while (!stack.empty()) {
            auto [d, v] = stack.back();
            stack.pop_back();
            int& slot = role[dart_id(d)];
            if (slot != -1) {
                if (slot != v)
                    throw Error("inconsistent-orientation in PD input");
                continue;
            }
            slot = v;
            for (const Dart& m : partner_darts(d))
                stack.push_back({m, 1 - v});
        }
    };

    for (int ci = 0; ci < static_cast<int>(crossings.size()); ++ci) {
        propagate({ci, 0}, 1);
        propagate({ci, 2}, 0);
    }
    // Components that never pass under anything are still undetermined;
    // orient them deterministically.
    for (int ci = 0; ci < static_cast<int>(crossings.size()); ++ci)
        for (int p = 0; p < 4; ++p)
            if (role[4 * ci + p] == -1)
                propagate({ci, p}, 0);

    for (Crossing& c : crossings) {
        // in1: the incoming dart of axis 1
        int ci = static_cast<int>(&c - crossings.data());
        c.in1 = role[4 * ci + 1] == 1 ? 1 : 3;
    }
    // A PD with no crossings at all stands for the 0-framed unknot.
    if (crossings.empty() && free_loops == 0)
        free_loops = 1;
    return LinkDiagram(std::move(crossings), free_loops);
}

inline LinkDiagram parse_pd_file_text(const std::string& text)
{
    return parse_pd(text);
}

// Standard diagrammatic connected sum along the smallest arc of each knot.
inline LinkDiagram connected_sum_knots(const LinkDiagram& k1,
                                       const LinkDiagram& k2)
{
    auto check_knot = [](const LinkDiagram& k) {
        if (k.component_count() != 1)
            throw Error("connected sum needs single-component diagrams");
    };
    check_knot(k1);
    check_knot(k2);
    if (k1.crossing_count() == 0)
        return k2;
    if (k2.crossing_count() == 0)
        return k1;

    int offset = 0;
    for (const Crossing& c : k1.crossings())
        for (int p = 0; p < 4; ++p)
            offset = std::max(offset, c.arc[p]);

    LinkDiagram out;
    out.cross_ = k1.crossings();
    for (Crossing c : k2.crossings()) {
        for (int p = 0; p < 4; ++p)
            c.arc[p] += offset;
        out.cross_.push_back(c);
    }
    out.free_loops_ = 0;

    int alpha = out.cross_.front().arc[0];
    for (const Crossing& c : k1.crossings())
        for (int p = 0; p < 4; ++p)
            alpha = std::min(alpha, c.arc[p]);
    int beta = offset + 1;
    {
        int min2 = out.cross_.back().arc[0];
        for (std::size_t i = k1.crossings().size(); i < out.cross_.size(); ++i)
            for (int p = 0; p < 4; ++p)
                min2 = std::min(min2, out.cross_[i].arc[p]);
        beta = min2;
    }

    // Cut both arcs and cross-join: relabel the head slots.
    Dart ha = out.head_of(alpha);
    Dart hb = out.head_of(beta);
    out.cross_[ha.crossing].arc[ha.pos] = beta;
    out.cross_[hb.crossing].arc[hb.pos] = alpha;
    out.validate();
    return out;
}

} // namespace chordweave
