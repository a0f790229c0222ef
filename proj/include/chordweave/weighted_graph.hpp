#pragma once

// Simple graphs with positive integer vertex weights: the carrier of the
// chromatic algebra. Contraction merges endpoints, adds weights, and
// collapses multi-edges. Canonical labeling is an exact branch-and-bound
// search, good enough for the <= 12 vertex guard.

#include "util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chordweave {

struct Edge {
    int u, v; // u < v

    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class WeightedGraph {
public:
    WeightedGraph() = default;

    explicit WeightedGraph(std::vector<int> weights,
                           std::vector<Edge> edges = {},
                           std::vector<std::string> names = {})
        : weights_(std::move(weights)), names_(std::move(names))
    {
        for (int w : weights_)
            if (w < 1)
                throw Error("vertex weights must be >= 1");
        for (const Edge& e : edges)
            add_edge(e.u, e.v);
    }

    int vertex_count() const { return static_cast<int>(weights_.size()); }
    int weight(int v) const { return weights_.at(v); }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Degree of the graph in the chromatic grading: sum of the weights.
    int degree() const
    {
        int d = 0;
        for (int w : weights_)
            d += w;
        return d;
    }

    bool has_edge(int u, int v) const
    {
        Edge e(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    void add_edge(int u, int v)
    {
        if (u == v)
            throw Error("loops are not allowed");
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
            throw Error("edge endpoint out of range");
        Edge e(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e)
            return;
        edges_.insert(it, e);
    }

    std::string name(int v) const
    {
        if (v < static_cast<int>(names_.size()) && !names_[v].empty())
            return names_[v];
        return "v" + std::to_string(v);
    }

    WeightedGraph delete_edge(const Edge& e) const
    {
        require_edge(e);
        WeightedGraph g(*this);
        g.edges_.erase(std::find(g.edges_.begin(), g.edges_.end(), e));
        return g;
    }

    WeightedGraph contract_edge(const Edge& e) const
    {
        require_edge(e);
        // Merge v into u; the merged vertex keeps index order compactness.
        std::vector<int> remap(weights_.size());
        std::vector<int> w;
        for (int i = 0; i < vertex_count(); ++i) {
            if (i == e.v) {
                remap[i] = -1; // filled below
                continue;
            }
            remap[i] = static_cast<int>(w.size());
            w.push_back(weights_[i]);
        }
        remap[e.v] = remap[e.u];
        w[remap[e.u]] = weights_[e.u] + weights_[e.v];
        WeightedGraph g(std::move(w));
        for (const Edge& f : edges_) {
            if (f == e)
                continue;
            int a = remap[f.u], b = remap[f.v];
            if (a != b)
                g.add_edge(a, b); // multiple edges collapse here
        }
        return g;
    }

    std::vector<std::vector<int>> adjacency() const
    {
        std::vector<std::vector<int>> adj(weights_.size());
        for (const Edge& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }

    int component_count() const
    {
        auto adj = adjacency();
        std::vector<char> seen(weights_.size(), 0);
        int comps = 0;
        for (int start = 0; start < vertex_count(); ++start) {
            if (seen[start])
                continue;
            ++comps;
            std::vector<int> stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v])
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
        }
        return comps;
    }

    bool is_bipartite() const
    {
        auto adj = adjacency();
        std::vector<int> color(weights_.size(), -1);
        for (int start = 0; start < vertex_count(); ++start) {
            if (color[start] != -1)
                continue;
            color[start] = 0;
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v]) {
                    if (color[u] == -1) {
                        color[u] = 1 - color[v];
                        stack.push_back(u);
                    } else if (color[u] == color[v]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    friend bool operator==(const WeightedGraph& g1, const WeightedGraph& g2)
    {
        return g1.weights_ == g2.weights_ && g1.edges_ == g2.edges_;
    }

private:
    void require_edge(const Edge& e) const
    {
        if (!has_edge(e.u, e.v))
            throw Error("missing-edge: {" + name(e.u) + "," + name(e.v) + "}");
    }

    std::vector<int> weights_;
    std::vector<Edge> edges_;
    std::vector<std::string> names_; // only used for I/O and messages
};

namespace detail {

// Branch-and-bound search for the lexicographically smallest vertex
// ordering. Each placed vertex contributes the chunk
// (weight, adjacency bits to previously placed vertices); chunk sequences
// are compared lexicographically. Interchangeable twin candidates are
// branched only once.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const WeightedGraph& g) : g_(g), n_(g.vertex_count())
    {
        adj_.assign(n_, std::vector<char>(n_, 0));
        for (const Edge& e : g.edges()) {
            adj_[e.u][e.v] = 1;
            adj_[e.v][e.u] = 1;
        }
    }

    // Returns (encoded canonical form, one optimal ordering).
    std::pair<std::vector<int>, std::vector<int>> run()
    {
        best_.clear();
        best_order_.clear();
        have_best_ = false;
        std::vector<int> order;
        std::vector<int> chunks;
        std::vector<char> used(n_, 0);
        extend(order, chunks, used);
        return {best_, best_order_};
    }

private:
    void extend(std::vector<int>& order, std::vector<int>& chunks,
                std::vector<char>& used)
    {
        if (static_cast<int>(order.size()) == n_) {
            if (!have_best_ || chunks < best_) {
                best_ = chunks;
                best_order_ = order;
                have_best_ = true;
            }
            return;
        }
        // Candidate chunks for this position.
        std::vector<std::pair<std::vector<int>, int>> cands;
        for (int v = 0; v < n_; ++v) {
            if (used[v])
                continue;
            std::vector<int> chunk;
            chunk.push_back(g_.weight(v));
            for (int placed : order)
                chunk.push_back(adj_[v][placed]);
            cands.emplace_back(std::move(chunk), v);
        }
        std::sort(cands.begin(), cands.end());
        const std::vector<int>& min_chunk = cands.front().first;
        std::vector<int> tried;
        for (const auto& [chunk, v] : cands) {
            if (chunk != min_chunk)
                break;
            bool twin_seen = false;
            for (int u : tried)
                if (is_twin(u, v)) {
                    twin_seen = true;
                    break;
                }
            if (twin_seen)
                continue;
            tried.push_back(v);
            std::size_t mark = chunks.size();
            chunks.insert(chunks.end(), chunk.begin(), chunk.end());
            if (!have_best_ || !worse_than_best(chunks)) {
                order.push_back(v);
                used[v] = 1;
                extend(order, chunks, used);
                used[v] = 0;
                order.pop_back();
            }
            chunks.resize(mark);
        }
    }

    bool worse_than_best(const std::vector<int>& prefix) const
    {
        for (std::size_t i = 0; i < prefix.size() && i < best_.size(); ++i) {
            if (prefix[i] < best_[i])
                return false;
            if (prefix[i] > best_[i])
                return true;
        }
        return false;
    }

    // u, v are twins when swapping them is an automorphism.
    bool is_twin(int u, int v) const
    {
        if (g_.weight(u) != g_.weight(v))
            return false;
        for (int w = 0; w < n_; ++w) {
            if (w == u || w == v)
                continue;
            if (adj_[u][w] != adj_[v][w])
                return false;
        }
        return true;
    }

    const WeightedGraph& g_;
    int n_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> best_;
    std::vector<int> best_order_;
    bool have_best_ = false;
};

} // namespace detail

struct CanonicalLabel {
    std::string key;        // equal exactly for isomorphic weighted graphs
    std::vector<int> order; // order[i] = original vertex at canonical slot i
};

inline CanonicalLabel canonical_label(const WeightedGraph& g)
{
    if (g.vertex_count() > 12)
        throw Error("canonical_label: vertex count exceeds guard (12)");
    if (g.vertex_count() == 0)
        return {"[]", {}};
    auto [chunks, order] = detail::CanonicalSearch(g).run();
    std::string key = "[";
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        if (i)
            key += ",";
        key += std::to_string(chunks[i]);
    }
    key += "]";
    return {key, order};
}

inline WeightedGraph graph_from_json(const nlohmann::json& j)
{
    std::vector<int> weights;
    std::vector<std::string> names;
    std::map<std::string, int> index_of;
    for (const auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        if (index_of.count(id))
            throw Error("duplicate vertex id: " + id);
        index_of[id] = static_cast<int>(weights.size());
        weights.push_back(v.at("weight").get<int>());
        names.push_back(id);
    }
    WeightedGraph g(weights, {}, names);
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            std::string a = e.at(0).get<std::string>();
            std::string b = e.at(1).get<std::string>();
            if (!index_of.count(a) || !index_of.count(b))
                throw Error("edge references unknown vertex");
            g.add_edge(index_of[a], index_of[b]);
        }
    }
    return g;
}

inline nlohmann::json graph_to_json(const WeightedGraph& g)
{
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        j["vertices"].push_back({{"id", g.name(v)}, {"weight", g.weight(v)}});
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({g.name(e.u), g.name(e.v)});
    return j;
}

} // namespace chordweave
