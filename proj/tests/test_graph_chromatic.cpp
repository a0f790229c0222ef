#include <catch2/catch_amalgamated.hpp>

#include <chordweave/chromatic.hpp>
#include <chordweave/weighted_graph.hpp>

#include <random>

using namespace chordweave;

namespace {

WeightedGraph triangle()
{
    WeightedGraph g({1, 1, 1});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

WeightedGraph path3()
{
    WeightedGraph g({1, 1, 1});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

WeightedGraph random_graph(std::mt19937& rng, int max_vertices, int max_weight)
{
    std::uniform_int_distribution<int> nv(1, max_vertices);
    std::uniform_int_distribution<int> wt(1, max_weight);
    int n = nv(rng);
    std::vector<int> w(n);
    for (int& x : w)
        x = wt(rng);
    WeightedGraph g(w);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 2 == 0)
                g.add_edge(i, j);
    return g;
}

std::map<VarId, MPoly> s_to_power_sums(const MPoly& p, int r)
{
    std::map<VarId, MPoly> out;
    for (VarId v : p.vars())
        if (v.family == VarFamily::S)
            out[v] = power_sum(static_cast<int>(v.index), r);
    return out;
}

} // namespace

TEST_CASE("delete and contract")
{
    WeightedGraph k2({1, 1});
    k2.add_edge(0, 1);
    WeightedGraph del = k2.delete_edge({0, 1});
    CHECK(del.vertex_count() == 2);
    CHECK(del.edges().empty());
    WeightedGraph con = k2.contract_edge({0, 1});
    CHECK(con.vertex_count() == 1);
    CHECK(con.weight(0) == 2);

    WeightedGraph tri_con = triangle().contract_edge({0, 1});
    CHECK(tri_con.vertex_count() == 2);
    CHECK(tri_con.edges().size() == 1); // the doubled edge collapses
    CHECK(tri_con.weight(0) + tri_con.weight(1) == 3);

    WeightedGraph big({3, 4});
    big.add_edge(0, 1);
    CHECK(big.contract_edge({0, 1}).weight(0) == 7);

    CHECK_THROWS_AS(k2.delete_edge({0, 1}).delete_edge({0, 1}), Error);
}

TEST_CASE("reduce to the s-polynomial algebra")
{
    WeightedGraph vertex({4});
    CHECK(reduce(vertex).render() == "s4");
    WeightedGraph k2({1, 1});
    k2.add_edge(0, 1);
    CHECK(reduce(k2).render() == "s1^2 - s2");
    CHECK(reduce(path3()).render() == "s1^3 - 2*s1*s2 + s3");
    CHECK(reduce(WeightedGraph(std::vector<int>{})) == MPoly::constant(1));
}

TEST_CASE("gamma_bar on small diagrams")
{
    CHECK(gamma_bar(ChordDiagram::from_word("11")).render() == "s1");
    CHECK(gamma_bar(ChordDiagram::from_word("1212")).render() == "s1^2 - s2");
    CHECK(gamma_bar(ChordDiagram::from_word("1122")).render() == "s1^2");
}

TEST_CASE("proper colorings")
{
    WeightedGraph k2({1, 1});
    k2.add_edge(0, 1);
    CHECK(proper_colorings(k2, 2).size() == 2);
    CHECK(proper_colorings(triangle(), 2).empty());
    CHECK(proper_colorings(WeightedGraph(std::vector<int>{}), 5).size() == 1);
}

TEST_CASE("coloring weight systems on graphs")
{
    WeightedGraph vertex({3});
    CHECK(wbar_rf(vertex, ColorWeightTable::ones(2, 3)) == 2);
    CHECK(wbar_rf(triangle(), ColorWeightTable::ones(2, 3)) == 0);

    ColorWeightTable identity(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k <= 2; ++k)
            identity.set(i, k, Rat(k));
    WeightedGraph k2({1, 1});
    k2.add_edge(0, 1);
    CHECK(wbar_rf(k2, identity) == 2);

    CHECK(wbar_rx(vertex, 2).render() == "x1^3 + x2^3");
    CHECK(wbar_rx(k2, 2).render() == "2*x1*x2");
    CHECK(wbar_rx(triangle(), 2).is_zero());

    // table-range error
    ColorWeightTable small(2, 1);
    CHECK_THROWS_AS(wbar_rf(vertex, small), Error);
}

TEST_CASE("canonical labels")
{
    WeightedGraph k21({1, 2});
    k21.add_edge(0, 1);
    WeightedGraph k12({2, 1});
    k12.add_edge(0, 1);
    CHECK(canonical_label(k21).key == canonical_label(k12).key);

    WeightedGraph iso({1, 1});
    WeightedGraph k2({1, 1});
    k2.add_edge(0, 1);
    CHECK(canonical_label(k2).key != canonical_label(iso).key);

    WeightedGraph big(std::vector<int>(13, 1));
    CHECK_THROWS_AS(canonical_label(big), Error);

    // relabeling invariance on random graphs
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        WeightedGraph g = random_graph(rng, 6, 3);
        int n = g.vertex_count();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i)
            w[perm[i]] = g.weight(i);
        WeightedGraph h(w);
        for (const Edge& e : g.edges())
            h.add_edge(perm[e.u], perm[e.v]);
        CHECK(canonical_label(g).key == canonical_label(h).key);
    }
}

TEST_CASE("chromatic relations hold for wbar and reduce")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedGraph g = random_graph(rng, 6, 3);
        int d_max = g.degree();
        ColorWeightTable tbl =
            ColorWeightTable::geometric({rat(2, 1), rat(-1, 3)}, d_max);
        for (const Edge& e : g.edges()) {
            WeightedGraph del = g.delete_edge(e);
            WeightedGraph con = g.contract_edge(e);
            CHECK(wbar_rf(g, tbl) == wbar_rf(del, tbl) - wbar_rf(con, tbl));
            CHECK(reduce(g) == reduce(del) - reduce(con));
        }
    }
}

TEST_CASE("grading and products")
{
    std::mt19937 rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        WeightedGraph g = random_graph(rng, 5, 3);
        MPoly p = reduce(g);
        for (const auto& [m, c] : p.terms()) {
            int grade = 0;
            for (const auto& [v, e] : m)
                grade += static_cast<int>(v.index) * e;
            CHECK(grade == g.degree());
        }
    }

    // product in C is disjoint union
    WeightedGraph g1({1, 2});
    g1.add_edge(0, 1);
    WeightedGraph g2({1, 1});
    g2.add_edge(0, 1);
    WeightedGraph both({1, 2, 1, 1});
    both.add_edge(0, 1);
    both.add_edge(2, 3);
    CHECK(reduce(both) == reduce(g1) * reduce(g2));
}

TEST_CASE("substitution consistency between reduce and wbar_rx")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedGraph g = random_graph(rng, 5, 2);
        MPoly p = reduce(g);
        for (int r = 1; r <= 3; ++r)
            CHECK(p.substitute(s_to_power_sums(p, r)) == wbar_rx(g, r));
    }
}

TEST_CASE("edge choice does not change reduce")
{
    // reduce picks a canonical edge; recursing on any other edge by hand
    // must give the same value.
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        WeightedGraph g = random_graph(rng, 5, 2);
        MPoly expected = reduce(g);
        for (const Edge& e : g.edges())
            CHECK(reduce(g.delete_edge(e)) - reduce(g.contract_edge(e)) ==
                  expected);
    }
}

TEST_CASE("graph json round trip")
{
    WeightedGraph g({1, 2}, {}, {"a", "b"});
    g.add_edge(0, 1);
    nlohmann::json j = graph_to_json(g);
    WeightedGraph back = graph_from_json(j);
    CHECK(back == g);
    CHECK(back.name(0) == "a");

    nlohmann::json bad = {{"vertices", {{{"id", "a"}, {"weight", 0}}}}};
    CHECK_THROWS(graph_from_json(bad));
}
