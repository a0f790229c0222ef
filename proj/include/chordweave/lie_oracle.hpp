#pragma once

// Brute-force tensor evaluation of the Lie-algebra weight systems for gl_n
// and so_n (defining representations, scaled Casimirs, finite direct sums).
// This is the independent ground truth for the combinatorial state models.
//
// Evaluation places the two matrix factors of each Casimir basis term at
// the chord's endpoints and traces the product of the 2*deg endomorphisms
// of M = (R^n)^(tensor r) around the circle. Endpoint operators act on one
// tensor slot only, so the trace is computed by chasing basis vectors
// through the chain instead of materializing matrices.

#include "chord_diagram.hpp"
#include "mpoly.hpp"
#include "rational.hpp"
#include "state_weights.hpp"

#include <cstdint>
#include <vector>

namespace chordweave {

struct LieSpec {
    LieFamily family = LieFamily::GL;
    int n = 2;                         // matrix size
    std::vector<Rat> scales = {Rat(1)}; // Casimir scale per summand

    int summands() const { return static_cast<int>(scales.size()); }
};

namespace detail {

// A Casimir basis term u (x) v with an integer prefactor. Matrices are
// n x n with entries in {-1,0,1} and at most two nonzeros, stored as
// column -> list of (row, value).
struct BasisTerm {
    std::vector<std::vector<std::pair<int, int>>> left, right;
    int coeff = 1;
};

inline std::vector<std::vector<std::pair<int, int>>> elementary(int n, int i,
                                                                int j)
{
    // e_ij maps e_j to e_i
    std::vector<std::vector<std::pair<int, int>>> cols(n);
    cols[j].emplace_back(i, 1);
    return cols;
}

inline std::vector<std::vector<std::pair<int, int>>> so_basis(int n, int i,
                                                              int j)
{
    // M_ij = e_ij - e_ji for i < j
    std::vector<std::vector<std::pair<int, int>>> cols(n);
    cols[j].emplace_back(i, 1);
    cols[i].emplace_back(j, -1);
    return cols;
}

// gl_n: X = sum e_ij (x) e_ji. so_n with (a,b) = tr(ab)/2: the basis M_ij
// has dual -M_ij, so omega = sum_{i<j} M_ij (x) M_ij with prefactor -1.
inline std::vector<BasisTerm> casimir_terms(LieFamily family, int n)
{
    std::vector<BasisTerm> out;
    if (family == LieFamily::GL) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.push_back({elementary(n, i, j), elementary(n, j, i), 1});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                out.push_back({so_basis(n, i, j), so_basis(n, i, j), -1});
    }
    return out;
}

// One endpoint operator: a sparse n x n matrix acting on tensor slot
// `slot` of (R^n)^(x r).
struct EndpointOp {
    const std::vector<std::vector<std::pair<int, int>>>* mat = nullptr;
    int slot = 0;
};

// tr over (R^n)^(x r) of ops[0] ops[1] ... ops[last], chasing each basis
// vector right to left. Coefficients stay tiny integers.
inline long trace_chain(const std::vector<EndpointOp>& ops, int n, int r)
{
    long total = 0;
    std::vector<int> digits(r);

    long dim = 1;
    for (int i = 0; i < r; ++i)
        dim *= n;

    for (long v0 = 0; v0 < dim; ++v0) {
        long rem = v0;
        for (int s = r - 1; s >= 0; --s) {
            digits[s] = static_cast<int>(rem % n);
            rem /= n;
        }
        // DFS applying the rightmost operator first; a chase contributes
        // when it returns to the starting basis vector.
        long acc = 0;
        std::vector<int> cur = digits;
        auto rec = [&](auto&& self, int k, std::vector<int>& dig, long coeff)
            -> void {
            if (k < 0) {
                if (dig == digits)
                    acc += coeff;
                return;
            }
            const EndpointOp& op = ops[k];
            int col = dig[op.slot];
            const auto& entries = (*op.mat)[col];
            for (const auto& [row, val] : entries) {
                int saved = dig[op.slot];
                dig[op.slot] = row;
                self(self, k - 1, dig, coeff * val);
                dig[op.slot] = saved;
            }
        };
        rec(rec, static_cast<int>(ops.size()) - 1, cur, 1);
        total += acc;
    }
    return total;
}

} // namespace detail

inline void oracle_cost_guard(const LieSpec& spec, int degree)
{
    double summands = 1.0;
    double per_chord = static_cast<double>(spec.summands()) *
                       static_cast<double>(spec.n) * spec.n;
    for (int i = 0; i < degree; ++i)
        summands *= per_chord;
    if (summands > 1e6)
        throw Error("oracle cost guard exceeded: (r*n^2)^deg > 10^6");
}

// W_{g,Omega,tau^(x r)}(D), exactly.
inline Rat oracle_eval(const LieSpec& spec, const ChordDiagram& d)
{
    if (spec.n < 2)
        throw Error("oracle needs n >= 2");
    if (spec.summands() < 1)
        throw Error("oracle needs at least one summand");
    int deg = d.degree();
    oracle_cost_guard(spec, deg);

    int r = spec.summands();
    if (deg == 0) {
        // sdim M = dim M = n^r (no odd part)
        Rat dim(1);
        for (int i = 0; i < r; ++i)
            dim *= spec.n;
        return dim;
    }

    auto terms = detail::casimir_terms(spec.family, spec.n);
    auto chords = d.chords();

    // Assignment per chord: (summand slot, Casimir basis term).
    int options = r * static_cast<int>(terms.size());
    std::vector<int> choice(deg, 0);
    Rat total(0);
    while (true) {
        std::vector<detail::EndpointOp> ops(2 * deg);
        Rat scale(1);
        long sign = 1;
        for (int k = 0; k < deg; ++k) {
            int slot = choice[k] / static_cast<int>(terms.size());
            const detail::BasisTerm& term =
                terms[choice[k] % static_cast<int>(terms.size())];
            scale *= spec.scales[slot];
            sign *= term.coeff;
            ops[chords[k].first] = {&term.left, slot};
            ops[chords[k].second] = {&term.right, slot};
        }
        long tr = detail::trace_chain(ops, spec.n, r);
        if (tr != 0)
            total += Rat(sign * tr) * scale;

        int pos = deg - 1;
        while (pos >= 0 && choice[pos] == options - 1)
            choice[pos--] = 0;
        if (pos < 0)
            break;
        ++choice[pos];
    }
    return total;
}

// Casimir scaling: W with Casimir a*omega equals a^deg * W with omega.
inline bool oracle_scaling_check(const LieSpec& spec, const ChordDiagram& d,
                                 const Rat& a)
{
    if (spec.summands() != 1)
        throw Error("scaling check is for a single summand");
    LieSpec scaled = spec;
    scaled.scales = {a};
    LieSpec unit = spec;
    unit.scales = {Rat(1)};
    return oracle_eval(scaled, d) ==
           rat_pow(a, d.degree()) * oracle_eval(unit, d);
}

// Direct-sum decomposition: the r-summand oracle value equals the chord
// coloring sum of products of single-summand values.
inline bool oracle_direct_sum_check(LieFamily family, int n, int r,
                                    const std::vector<Rat>& scales,
                                    const ChordDiagram& d)
{
    if (static_cast<int>(scales.size()) != r)
        throw Error("need one scale per summand");
    LieSpec full{family, n, scales};
    Rat lhs = oracle_eval(full, d);

    // The single-summand value of an empty class is dim(R^n) = n, which is
    // exactly the all-identity slot trace, so no extra normalization enters.
    LieSpec single{family, n, {Rat(1)}};
    Rat rhs(0);
    for (const ChordColoring& col : chord_colorings(d, r)) {
        Rat term(1);
        for (int i = 0; i < r; ++i) {
            term *= rat_pow(scales[i], col.classes[i].degree());
            term *= oracle_eval(single, col.classes[i]);
        }
        rhs += term;
    }
    return lhs == rhs;
}

namespace detail {

// Lagrange basis polynomial over integer nodes, as dense coefficients.
inline std::vector<Rat> lagrange_basis(const std::vector<int>& nodes,
                                       std::size_t which)
{
    std::vector<Rat> poly{Rat(1)};
    Rat denom(1);
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        if (m == which)
            continue;
        // poly *= (X - nodes[m])
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= Rat(nodes[m]) * poly[i];
        }
        poly = std::move(next);
        denom *= Rat(nodes[which] - nodes[m]);
    }
    for (Rat& c : poly)
        c /= denom;
    return poly;
}

inline MPoly dense_to_poly(const std::vector<Rat>& coeffs, VarId v)
{
    MPoly out;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0)
            out.add_term(e == 0 ? Monomial{} : Monomial{{v, static_cast<int>(e)}},
                         coeffs[e]);
    return out;
}

} // namespace detail

// Reconstructs W_{g,r}(D)(x1..xr, t) by Lagrange interpolation of oracle
// values over the integer grid {2,...,r+deg+2} of Casimir scales and n,
// dividing each sample by n^r.
inline MPoly interpolate_wgr(const ChordDiagram& d, LieFamily family, int r)
{
    int deg = d.degree();
    if (deg > 2 || r > 2 || r < 1)
        throw Error("interpolate_wgr is guarded at degree <= 2, r <= 2");

    std::vector<int> nodes;
    for (int v = 2; v <= r + deg + 2; ++v)
        nodes.push_back(v);
    std::size_t k = nodes.size();

    std::vector<std::vector<Rat>> bases;
    for (std::size_t i = 0; i < k; ++i)
        bases.push_back(detail::lagrange_basis(nodes, i));

    MPoly result;
    std::vector<std::size_t> pick(r + 1, 0); // scales a_1..a_r, then n
    while (true) {
        std::vector<Rat> scales;
        for (int i = 0; i < r; ++i)
            scales.emplace_back(nodes[pick[i]]);
        int n = nodes[pick[r]];
        LieSpec spec{family, n, scales};
        Rat value = oracle_eval(spec, d) / rat_pow(Rat(n), r);

        if (value != 0) {
            MPoly term = MPoly::constant(value);
            for (int i = 0; i < r; ++i)
                term *= detail::dense_to_poly(bases[pick[i]], VarId::x(i + 1));
            term *= detail::dense_to_poly(bases[pick[r]], VarId::t());
            result += term;
        }

        int pos = r;
        while (pos >= 0 && pick[pos] == k - 1)
            pick[pos--] = 0;
        if (pos < 0)
            break;
        ++pick[pos];
    }
    return result;
}

} // namespace chordweave
