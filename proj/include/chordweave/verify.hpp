#pragma once

// The property suites behind `chordweave verify`. Each suite runs a family
// of exhaustive or randomized checks and reports one line per check, with
// the first counterexample when something fails. Reports are deterministic
// for fixed inputs regardless of the job count.

#include "chi.hpp"
#include "chord_diagram.hpp"
#include "chromatic.hpp"
#include "diagonal.hpp"
#include "four_term.hpp"
#include "lie_oracle.hpp"
#include "power_sums.hpp"
#include "skein.hpp"
#include "state_weights.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace chordweave {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample or a short summary
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const
    {
        for (const CheckResult& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

struct VerifyBounds {
    int max_degree = -1;   // -1: suite default
    std::vector<int> ns;   // matrix sizes for the oracle suite
    int r = -1;            // color count bound
    unsigned jobs = 1;
    unsigned seed = 20240001;
};

namespace detail {

// Evaluates `item` over all diagrams of degree 2..max_degree from the 4T
// generator and reports per-system vanishing.
inline CheckResult check_over_quadruples(
    const std::string& name, int max_degree,
    const std::function<bool(const FourTermQuadruple&)>& holds)
{
    CheckResult result{name, true, ""};
    int total = 0;
    for (int n = 2; n <= max_degree; ++n) {
        for (const FourTermQuadruple& q : generate_4T(n)) {
            ++total;
            if (!holds(q)) {
                result.pass = false;
                result.detail = "counterexample: " + q.d[0].word() + " - " +
                                q.d[1].word() + " - " + q.d[2].word() + " + " +
                                q.d[3].word();
                return result;
            }
        }
    }
    result.detail = std::to_string(total) + " quadruples";
    return result;
}

inline WeightedGraph random_graph(std::mt19937& rng, int max_vertices,
                                  int max_weight)
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

} // namespace detail

// 4T vanishing for every implemented weight system.
inline SuiteReport suite_fourT(const VerifyBounds& bounds = {})
{
    int max_degree = bounds.max_degree < 0 ? 4 : bounds.max_degree;
    int r_max = bounds.r < 0 ? 3 : bounds.r;
    SuiteReport report{"fourT", {}};

    auto poly_null = [](const FourTermQuadruple& q,
                        const std::function<MPoly(const ChordDiagram&)>& w) {
        return (w(q.d[0]) - w(q.d[1]) - w(q.d[2]) + w(q.d[3])).is_zero();
    };

    report.checks.push_back(detail::check_over_quadruples(
        "w_gl vanishes", max_degree, [&](const FourTermQuadruple& q) {
            return poly_null(q, [](const ChordDiagram& d) { return w_gl(d); });
        }));
    report.checks.push_back(detail::check_over_quadruples(
        "w_so vanishes", max_degree, [&](const FourTermQuadruple& q) {
            return poly_null(q, [](const ChordDiagram& d) { return w_so(d); });
        }));
    for (int r = 1; r <= r_max; ++r)
        report.checks.push_back(detail::check_over_quadruples(
            "w_rx r=" + std::to_string(r) + " vanishes", max_degree,
            [&, r](const FourTermQuadruple& q) {
                return poly_null(
                    q, [r](const ChordDiagram& d) { return w_rx(d, r); });
            }));
    report.checks.push_back(detail::check_over_quadruples(
        "w21 embedding count vanishes", max_degree,
        [&](const FourTermQuadruple& q) {
            return w21_embeddings(q.d[0]) - w21_embeddings(q.d[1]) -
                       w21_embeddings(q.d[2]) + w21_embeddings(q.d[3]) ==
                   0;
        }));
    report.checks.push_back(detail::check_over_quadruples(
        "gamma_bar vanishes", max_degree, [&](const FourTermQuadruple& q) {
            return poly_null(
                q, [](const ChordDiagram& d) { return gamma_bar(d); });
        }));
    report.checks.push_back(detail::check_over_quadruples(
        "tensor oracle vanishes", std::min(max_degree, 3),
        [&](const FourTermQuadruple& q) {
            for (LieSpec spec : {LieSpec{LieFamily::GL, 2, {Rat(1)}},
                                 LieSpec{LieFamily::SO, 3, {Rat(1)}}}) {
                if (oracle_eval(spec, q.d[0]) - oracle_eval(spec, q.d[1]) -
                        oracle_eval(spec, q.d[2]) + oracle_eval(spec, q.d[3]) !=
                    0)
                    return false;
            }
            return true;
        }));
    return report;
}

// Oracle vs state models, scaling, direct sums, interpolation.
inline SuiteReport suite_oracle(const VerifyBounds& bounds = {})
{
    SuiteReport report{"oracle", {}};
    int gl_degree = bounds.max_degree < 0 ? 4 : bounds.max_degree;
    int so_degree = std::min(gl_degree, 3);
    std::vector<int> gl_ns = bounds.ns.empty() ? std::vector<int>{2, 3}
                                               : bounds.ns;
    std::vector<int> so_ns = bounds.ns.empty() ? std::vector<int>{3, 4}
                                               : bounds.ns;

    auto eval_t = [](const MPoly& p, int n) {
        return p.substitute({{VarId::t(), MPoly::constant(Rat(n))}})
            .constant_value();
    };

    {
        CheckResult check{"gl oracle = n*w_gl(n)", true, ""};
        std::vector<std::pair<ChordDiagram, int>> cases;
        for (int deg = 0; deg <= gl_degree; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg))
                for (int n : gl_ns)
                    cases.emplace_back(d, n);
        auto results = parallel_map<bool>(
            cases.size(), bounds.jobs, [&](std::size_t i) {
                const auto& [d, n] = cases[i];
                return oracle_eval({LieFamily::GL, n, {Rat(1)}}, d) ==
                       Rat(n) * eval_t(w_gl(d), n);
            });
        for (std::size_t i = 0; i < cases.size(); ++i)
            if (!results[i]) {
                check.pass = false;
                check.detail = "counterexample: " + cases[i].first.word() +
                               " at n=" + std::to_string(cases[i].second);
                break;
            }
        if (check.pass)
            check.detail = std::to_string(cases.size()) + " evaluations";
        report.checks.push_back(check);
    }
    {
        CheckResult check{"so oracle = n*w_so(n)", true, ""};
        std::vector<std::pair<ChordDiagram, int>> cases;
        for (int deg = 0; deg <= so_degree; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg))
                for (int n : so_ns)
                    cases.emplace_back(d, n);
        auto results = parallel_map<bool>(
            cases.size(), bounds.jobs, [&](std::size_t i) {
                const auto& [d, n] = cases[i];
                return oracle_eval({LieFamily::SO, n, {Rat(1)}}, d) ==
                       Rat(n) * eval_t(w_so(d), n);
            });
        for (std::size_t i = 0; i < cases.size(); ++i)
            if (!results[i]) {
                check.pass = false;
                check.detail = "counterexample: " + cases[i].first.word() +
                               " at n=" + std::to_string(cases[i].second);
                break;
            }
        if (check.pass)
            check.detail = std::to_string(cases.size()) + " evaluations";
        report.checks.push_back(check);
    }
    {
        CheckResult check{"casimir scaling", true, ""};
        for (int deg = 0; deg <= std::min(gl_degree, 2) && check.pass; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg)) {
                if (!oracle_scaling_check({LieFamily::GL, 2, {Rat(1)}}, d,
                                          Rat(2)) ||
                    !oracle_scaling_check({LieFamily::SO, 3, {Rat(1)}}, d,
                                          Rat(3))) {
                    check.pass = false;
                    check.detail = "counterexample: " + d.word();
                    break;
                }
            }
        report.checks.push_back(check);
    }
    {
        CheckResult check{"direct sum decomposition", true, ""};
        for (int deg = 0; deg <= 2 && check.pass; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg))
                for (int n = 2; n <= 3; ++n)
                    for (LieFamily fam : {LieFamily::GL, LieFamily::SO})
                        if (!oracle_direct_sum_check(fam, n, 2,
                                                     {Rat(1), Rat(2)}, d)) {
                            check.pass = false;
                            check.detail = "counterexample: " + d.word();
                        }
        report.checks.push_back(check);
    }
    {
        CheckResult check{"interpolation matches w_gr", true, ""};
        for (int deg = 0; deg <= 2 && check.pass; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg))
                for (int r = 1; r <= 2; ++r)
                    for (LieFamily fam : {LieFamily::GL, LieFamily::SO})
                        if (!(interpolate_wgr(d, fam, r) == w_gr(d, fam, r))) {
                            check.pass = false;
                            check.detail = "counterexample: " + d.word();
                        }
        report.checks.push_back(check);
    }
    return report;
}

// The commuting triangle and the inverse map.
inline SuiteReport suite_triangle(const VerifyBounds& bounds = {})
{
    SuiteReport report{"triangle", {}};
    int max_degree = bounds.max_degree < 0 ? 5 : bounds.max_degree;
    int r_max = bounds.r < 0 ? 3 : bounds.r;

    {
        CheckResult check{"wbar_rx(Gamma(D), r) = w_rx(D, r)", true, ""};
        std::vector<ChordDiagram> diagrams;
        for (int deg = 0; deg <= max_degree; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg))
                diagrams.push_back(d);
        auto results = parallel_map<bool>(
            diagrams.size(), bounds.jobs, [&](std::size_t i) {
                for (int r = 1; r <= r_max; ++r)
                    if (!(wbar_rx(intersection_graph(diagrams[i]), r) ==
                          w_rx(diagrams[i], r)))
                        return false;
                return true;
            });
        for (std::size_t i = 0; i < diagrams.size(); ++i)
            if (!results[i]) {
                check.pass = false;
                check.detail = "counterexample: " + diagrams[i].word();
                break;
            }
        if (check.pass)
            check.detail = std::to_string(diagrams.size()) + " diagrams, r <= " +
                           std::to_string(r_max);
        report.checks.push_back(check);
    }
    {
        CheckResult check{"chromatic_from_wrx = gamma_bar", true, ""};
        int iso_degree = std::min(max_degree, 4);
        for (int deg = 1; deg <= iso_degree && check.pass; ++deg)
            for (const ChordDiagram& d : enumerate_diagrams(deg))
                if (!(chromatic_from_wrx(d) == gamma_bar(d))) {
                    check.pass = false;
                    check.detail = "counterexample: " + d.word();
                }
        report.checks.push_back(check);
    }
    return report;
}

// Chromatic relations on random weighted graphs, plus reduce consistency.
inline SuiteReport suite_chromrel(const VerifyBounds& bounds = {},
                                  int graph_count = 200)
{
    SuiteReport report{"chromrel", {}};
    int r_max = bounds.r < 0 ? 3 : bounds.r;
    std::mt19937 rng(bounds.seed);
    std::vector<WeightedGraph> graphs;
    for (int i = 0; i < graph_count; ++i)
        graphs.push_back(detail::random_graph(rng, 6, 3));

    CheckResult rel{"G = G' - G'' for wbar_rf and reduce", true, ""};
    CheckResult subs{"substitution s_d -> G_{d,r} matches wbar_rx", true, ""};
    auto results = parallel_map<std::pair<bool, bool>>(
        graphs.size(), bounds.jobs, [&](std::size_t i) {
            const WeightedGraph& g = graphs[i];
            ColorWeightTable tbl = ColorWeightTable::geometric(
                {rat(2, 1), rat(-1, 3)}, g.degree());
            bool rel_ok = true;
            for (const Edge& e : g.edges()) {
                WeightedGraph del = g.delete_edge(e);
                WeightedGraph con = g.contract_edge(e);
                if (wbar_rf(g, tbl) != wbar_rf(del, tbl) - wbar_rf(con, tbl) ||
                    !(reduce(g) == reduce(del) - reduce(con)))
                    rel_ok = false;
            }
            bool subs_ok = true;
            MPoly p = reduce(g);
            for (int r = 1; r <= r_max; ++r) {
                std::map<VarId, MPoly> bind;
                for (VarId v : p.vars())
                    if (v.family == VarFamily::S)
                        bind[v] = power_sum(static_cast<int>(v.index), r);
                if (!(p.substitute(bind) == wbar_rx(g, r)))
                    subs_ok = false;
            }
            return std::make_pair(rel_ok, subs_ok);
        });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!results[i].first && rel.pass) {
            rel.pass = false;
            rel.detail = "counterexample at graph " + std::to_string(i);
        }
        if (!results[i].second && subs.pass) {
            subs.pass = false;
            subs.detail = "counterexample at graph " + std::to_string(i);
        }
    }
    if (rel.pass)
        rel.detail = std::to_string(graph_count) + " graphs, every edge";
    if (subs.pass)
        subs.detail = std::to_string(graph_count) + " graphs, r <= " +
                      std::to_string(r_max);
    report.checks.push_back(rel);
    report.checks.push_back(subs);
    return report;
}

// Skein identities on the built-in corpus.
inline SuiteReport suite_skein(const VerifyBounds& bounds = {})
{
    (void)bounds;
    SuiteReport report{"skein", {}};
    MPoly A = MPoly::variable(VarId::a());
    MPoly Ai = MPoly::variable(VarId::a(), -1);
    MPoly Z = MPoly::variable(VarId::z());
    MPoly delta = (A - Ai) * MPoly::variable(VarId::z(), -1);

    LinkDiagram trefoil = parse_pd("X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\n");
    LinkDiagram fig8 =
        parse_pd("X[4,2,5,1]\nX[8,6,1,5]\nX[6,3,7,2]\nX[2,7,3,8]\n");
    LinkDiagram hopf = parse_pd("X[1,3,2,4]\nX[3,1,4,2]\n");
    LinkDiagram unlink2({}, 2);

    {
        CheckResult check{"upsilon(right trefoil) = 2y - y^-1", true, ""};
        check.pass = upsilon(trefoil).render() == "2*y - y^-1" &&
                     upsilon(trefoil.mirror()).render() == "-y + 2*y^-1";
        if (!check.pass)
            check.detail = "got " + upsilon(trefoil).render();
        report.checks.push_back(check);
    }
    {
        CheckResult check{"skein relations at every crossing", true, ""};
        for (const LinkDiagram& k : {trefoil, fig8, hopf}) {
            for (int c = 0; c < k.crossing_count() && check.pass; ++c) {
                LinkDiagram sw = k.switch_crossing(c);
                const LinkDiagram& kp = k.crossings()[c].sign() > 0 ? k : sw;
                const LinkDiagram& km = k.crossings()[c].sign() > 0 ? sw : k;
                LinkDiagram k0 = k.smooth_oriented(c);
                LinkDiagram ke = k.smooth_disoriented(c);
                if (!(homfly(kp) - homfly(km) == Z * homfly(k0)) ||
                    !(kauffman(kp) - kauffman(km) ==
                      Z * (kauffman(k0) - kauffman(ke)))) {
                    check.pass = false;
                    check.detail = "crossing " + std::to_string(c);
                }
            }
        }
        report.checks.push_back(check);
    }
    {
        CheckResult check{"split union factors", true, ""};
        check.pass = homfly(unlink2) == delta &&
                     kauffman(unlink2) == delta + MPoly::constant(1);
        report.checks.push_back(check);
    }
    {
        CheckResult check{"basepoint independence", true, ""};
        for (const LinkDiagram& k : {trefoil, fig8}) {
            MPoly expected = upsilon(k);
            for (const auto& comp : k.components())
                for (int arc : comp.arcs)
                    if (!(upsilon(k, arc) == expected))
                        check.pass = false;
        }
        report.checks.push_back(check);
    }
    {
        CheckResult check{"diagonal extraction equals the upsilon series",
                          true, ""};
        for (const LinkDiagram& k : {trefoil, fig8}) {
            HSeries target = upsilon_series(k, 4);
            if (!(homfly_diagonal(k, 4) == target) ||
                !(kauffman_diagonal(k, 4) == target))
                check.pass = false;
        }
        report.checks.push_back(check);
    }
    {
        CheckResult check{"upsilon is multiplicative", true, ""};
        LinkDiagram granny = connected_sum_knots(trefoil, trefoil);
        LinkDiagram square = connected_sum_knots(trefoil, trefoil.mirror());
        check.pass = upsilon(granny) == upsilon(trefoil).pow(2) &&
                     upsilon(square) ==
                         upsilon(trefoil) * upsilon(trefoil.mirror());
        report.checks.push_back(check);
    }
    return report;
}

// The exceptional character identities.
inline SuiteReport suite_chi(const VerifyBounds& bounds = {})
{
    (void)bounds;
    SuiteReport report{"chi", {}};
    {
        CheckResult check{"chi_G(3)(x3 - 4t^3) = 0", true, ""};
        check.pass =
            chi_eval(MPoly::parse("x3 - 4*t^3"), ChiAlgebra::G3).is_zero();
        report.checks.push_back(check);
    }
    {
        CheckResult check{"chi_F(4)(3x3 - 7t^3) = 0", true, ""};
        check.pass =
            chi_eval(MPoly::parse("3*x3 - 7*t^3"), ChiAlgebra::F4).is_zero();
        report.checks.push_back(check);
    }
    {
        CheckResult check{"chi(t) = t and chi(x1-like grading)", true, ""};
        check.pass = chi_g3_coeff(1) == 2 && chi_f4_coeff(1) == 2 &&
                     chi_eval(MPoly::parse("t^4"), ChiAlgebra::G3) ==
                         MPoly::parse("t^4");
        report.checks.push_back(check);
    }
    return report;
}

inline SuiteReport run_suite(const std::string& name,
                             const VerifyBounds& bounds)
{
    if (name == "fourT")
        return suite_fourT(bounds);
    if (name == "oracle")
        return suite_oracle(bounds);
    if (name == "triangle")
        return suite_triangle(bounds);
    if (name == "chromrel")
        return suite_chromrel(bounds);
    if (name == "skein")
        return suite_skein(bounds);
    if (name == "chi")
        return suite_chi(bounds);
    throw Error("unknown suite: " + name);
}

} // namespace chordweave
