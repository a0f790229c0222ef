// Acceptance suite: end-to-end checks of the headline identities, printed
// one per line. Every comparison is exact; the stated runtime budgets are
// enforced. Exit code 0 iff every criterion passes.

#include <chordweave/chordweave.hpp>

#include "knots.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace chordweave;
using namespace chordweave::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool pass = false;
    auto start = std::chrono::steady_clock::now();
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget: ") +
                  std::to_string(secs) + "s > " +
                  std::to_string(budget_seconds) + "s";
    }
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
         << label << " [" << secs << "s]";
    if (!pass && !detail.empty())
        line << " -- " << detail;
    std::cout << line.str() << "\n";
    if (!pass)
        ++failures;
}

Rat eval_t(const MPoly& p, int n)
{
    return p.substitute({{VarId::t(), MPoly::constant(Rat(n))}})
        .constant_value();
}

} // namespace

int main()
{
    criterion(1, "upsilon of the right trefoil and its mirror", 1.0,
              [](std::string& detail) {
                  LinkDiagram t = right_trefoil();
                  if (t.writhe() != 3) {
                      detail = "trefoil writhe " + std::to_string(t.writhe());
                      return false;
                  }
                  MPoly u = upsilon(t);
                  MPoly um = upsilon(t.mirror());
                  bool ok = u.render() == "2*y - y^-1" &&
                            um == MPoly::parse("2*y^-1 - y");
                  if (!ok)
                      detail = "got " + u.render() + " and " + um.render();
                  return ok;
              });

    criterion(2, "gl oracle equals n*w_gl(n) for degree <= 4, n in {2,3}",
              120.0, [](std::string& detail) {
                  for (int deg = 0; deg <= 4; ++deg)
                      for (const ChordDiagram& d : enumerate_diagrams(deg))
                          for (int n : {2, 3})
                              if (oracle_eval({LieFamily::GL, n, {Rat(1)}},
                                              d) != Rat(n) * eval_t(w_gl(d), n)) {
                                  detail = d.word() + " at n=" +
                                           std::to_string(n);
                                  return false;
                              }
                  return true;
              });

    criterion(3, "so oracle equals n*w_so(n) for degree <= 3, n in {3,4}",
              300.0, [](std::string& detail) {
                  for (int deg = 0; deg <= 3; ++deg)
                      for (const ChordDiagram& d : enumerate_diagrams(deg))
                          for (int n : {3, 4})
                              if (oracle_eval({LieFamily::SO, n, {Rat(1)}},
                                              d) != Rat(n) * eval_t(w_so(d), n)) {
                                  detail = d.word() + " at n=" +
                                           std::to_string(n);
                                  return false;
                              }
                  return true;
              });

    criterion(4, "commuting triangle for degree <= 5, r <= 3", 120.0,
              [](std::string& detail) {
                  for (int deg = 0; deg <= 5; ++deg)
                      for (const ChordDiagram& d : enumerate_diagrams(deg))
                          for (int r = 1; r <= 3; ++r)
                              if (!(wbar_rx(intersection_graph(d), r) ==
                                    w_rx(d, r))) {
                                  detail = d.word() + " at r=" +
                                           std::to_string(r);
                                  return false;
                              }
                  return true;
              });

    criterion(5, "power-sum round trip recovers gamma_bar for degree <= 4",
              0.0, [](std::string& detail) {
                  for (int deg = 1; deg <= 4; ++deg)
                      for (const ChordDiagram& d : enumerate_diagrams(deg))
                          if (!(chromatic_from_wrx(d) == gamma_bar(d))) {
                              detail = d.word();
                              return false;
                          }
                  return true;
              });

    criterion(
        6, "chromatic relations and substitution on 200 random graphs", 0.0,
        [](std::string& detail) {
            std::mt19937 rng(20240001);
            std::uniform_int_distribution<int> nv(1, 6), wt(1, 3);
            for (int i = 0; i < 200; ++i) {
                int n = nv(rng);
                std::vector<int> w(n);
                for (int& x : w)
                    x = wt(rng);
                WeightedGraph g(w);
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b)
                        if (rng() % 2 == 0)
                            g.add_edge(a, b);

                ColorWeightTable tbl = ColorWeightTable::geometric(
                    {rat(2, 1), rat(-1, 3)}, g.degree());
                for (const Edge& e : g.edges()) {
                    WeightedGraph del = g.delete_edge(e);
                    WeightedGraph con = g.contract_edge(e);
                    if (wbar_rf(g, tbl) !=
                            wbar_rf(del, tbl) - wbar_rf(con, tbl) ||
                        !(reduce(g) == reduce(del) - reduce(con))) {
                        detail = "relation fails at graph " + std::to_string(i);
                        return false;
                    }
                }
                MPoly p = reduce(g);
                for (int r = 1; r <= 3; ++r) {
                    std::map<VarId, MPoly> bind;
                    for (VarId v : p.vars())
                        if (v.family == VarFamily::S)
                            bind[v] = power_sum(static_cast<int>(v.index), r);
                    if (!(p.substitute(bind) == wbar_rx(g, r))) {
                        detail = "substitution fails at graph " +
                                 std::to_string(i);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(
        7, "4T vanishing for every weight system, degree <= 4", 0.0,
        [](std::string& detail) {
            for (int n = 2; n <= 4; ++n) {
                for (const FourTermQuadruple& q : generate_4T(n)) {
                    auto bad = [&](const std::string& which) {
                        detail = which + " at " + q.d[0].word() + "," +
                                 q.d[1].word() + "," + q.d[2].word() + "," +
                                 q.d[3].word();
                        return false;
                    };
                    auto null_poly =
                        [&](const std::function<MPoly(const ChordDiagram&)>& w) {
                            return (w(q.d[0]) - w(q.d[1]) - w(q.d[2]) +
                                    w(q.d[3]))
                                .is_zero();
                        };
                    if (!null_poly([](const ChordDiagram& d) { return w_gl(d); }))
                        return bad("w_gl");
                    if (!null_poly([](const ChordDiagram& d) { return w_so(d); }))
                        return bad("w_so");
                    for (int r = 1; r <= 3; ++r)
                        if (!null_poly([r](const ChordDiagram& d) {
                                return w_rx(d, r);
                            }))
                            return bad("w_rx r=" + std::to_string(r));
                    if (w21_embeddings(q.d[0]) - w21_embeddings(q.d[1]) -
                            w21_embeddings(q.d[2]) + w21_embeddings(q.d[3]) !=
                        0)
                        return bad("w21");
                    if (!null_poly(
                            [](const ChordDiagram& d) { return gamma_bar(d); }))
                        return bad("gamma_bar");
                    if (n <= 3) {
                        for (LieSpec spec :
                             {LieSpec{LieFamily::GL, 2, {Rat(1)}},
                              LieSpec{LieFamily::SO, 3, {Rat(1)}}}) {
                            Rat sum = oracle_eval(spec, q.d[0]) -
                                      oracle_eval(spec, q.d[1]) -
                                      oracle_eval(spec, q.d[2]) +
                                      oracle_eval(spec, q.d[3]);
                            if (sum != 0)
                                return bad("oracle");
                        }
                    }
                }
            }
            return true;
        });

    criterion(
        8, "top t-coefficient of w_gr and the interpolation reconstruction",
        0.0, [](std::string& detail) {
            for (int deg = 0; deg <= 4; ++deg)
                for (const ChordDiagram& d : enumerate_diagrams(deg))
                    for (int r = 1; r <= 2; ++r)
                        for (LieFamily fam : {LieFamily::GL, LieFamily::SO})
                            if (!(w_gr(d, fam, r).coeff_of(VarId::t(), deg) ==
                                  w_rx(d, r))) {
                                detail = "top coefficient at " + d.word();
                                return false;
                            }
            for (int deg = 0; deg <= 2; ++deg)
                for (const ChordDiagram& d : enumerate_diagrams(deg))
                    for (int r = 1; r <= 2; ++r)
                        for (LieFamily fam : {LieFamily::GL, LieFamily::SO})
                            if (!(interpolate_wgr(d, fam, r) ==
                                  w_gr(d, fam, r))) {
                                detail = "interpolation at " + d.word();
                                return false;
                            }
            return true;
        });

    criterion(
        9, "diagonal extraction equals the upsilon series to order 6", 300.0,
        [](std::string& detail) {
            std::vector<std::pair<std::string, LinkDiagram>> corpus = {
                {"right trefoil", right_trefoil()},
                {"left trefoil", left_trefoil()},
                {"figure eight", figure_eight()},
                {"granny", granny_knot()},
                {"square", square_knot()},
            };
            for (const auto& [name, k] : corpus) {
                HSeries target = upsilon_series(k, 6);
                if (!(homfly_diagonal(k, 6) == target)) {
                    detail = "homfly diagonal differs on " + name;
                    return false;
                }
                if (!(kauffman_diagonal(k, 6) == target)) {
                    detail = "kauffman diagonal differs on " + name;
                    return false;
                }
            }
            return true;
        });

    criterion(10, "split union factors of H and F", 0.0,
              [](std::string& detail) {
                  MPoly a = MPoly::variable(VarId::a());
                  MPoly ai = MPoly::variable(VarId::a(), -1);
                  MPoly zi = MPoly::variable(VarId::z(), -1);
                  MPoly delta = (a - ai) * zi;
                  LinkDiagram unlink = two_unlink();
                  if (!(homfly(unlink) == delta)) {
                      detail = "H(O|_|O) = " + homfly(unlink).render();
                      return false;
                  }
                  if (!(kauffman(unlink) == delta + MPoly::constant(1))) {
                      detail = "F(O|_|O) = " + kauffman(unlink).render();
                      return false;
                  }
                  return true;
              });

    criterion(
        11, "upsilon is multiplicative and basepoint independent", 0.0,
        [](std::string& detail) {
            std::vector<LinkDiagram> knots = {
                right_trefoil(), left_trefoil(), figure_eight(),
                kink(+1),        kink(-1),
            };
            int pairs = 0;
            for (std::size_t i = 0; i < knots.size() && pairs < 10; ++i)
                for (std::size_t j = i; j < knots.size() && pairs < 10; ++j) {
                    ++pairs;
                    if (!(upsilon(connected_sum_knots(knots[i], knots[j])) ==
                          upsilon(knots[i]) * upsilon(knots[j]))) {
                        detail = "pair " + std::to_string(i) + "," +
                                 std::to_string(j);
                        return false;
                    }
                }

            std::mt19937 rng(7);
            for (const LinkDiagram& k :
                 {right_trefoil(), figure_eight(), granny_knot(),
                  square_knot()}) {
                MPoly expected = upsilon(k);
                std::vector<int> arcs = k.components().front().arcs;
                for (int trial = 0; trial < 5; ++trial) {
                    int arc = arcs[rng() % arcs.size()];
                    if (!(upsilon(k, arc) == expected)) {
                        detail = "basepoint arc " + std::to_string(arc);
                        return false;
                    }
                }
            }
            return true;
        });

    criterion(12, "exceptional character identities", 0.0,
              [](std::string& detail) {
                  bool g3 = chi_eval(MPoly::parse("x3 - 4*t^3"), ChiAlgebra::G3)
                                .is_zero();
                  bool f4 =
                      chi_eval(MPoly::parse("3*x3 - 7*t^3"), ChiAlgebra::F4)
                          .is_zero();
                  if (!g3)
                      detail = "chi_G3(x3 - 4t^3) != 0";
                  if (!f4)
                      detail += std::string(detail.empty() ? "" : "; ") +
                                "chi_F4(3x3 - 7t^3) != 0";
                  return g3 && f4;
              });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
