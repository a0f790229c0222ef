#pragma once

// Conversion of symmetric polynomials in x1..xr to the power-sum basis
// G(1)..G(r). Degrees in scope are tiny, so the decomposition solves a
// linear system over the monomial basis instead of anything structured.

#include "mpoly.hpp"

#include <map>
#include <vector>

namespace chordweave {

// x1^k + ... + xr^k
inline MPoly power_sum(int k, int r)
{
    MPoly out;
    for (int i = 1; i <= r; ++i)
        out += MPoly::variable(VarId::x(static_cast<std::uint32_t>(i)), k);
    return out;
}

namespace detail {

// Partitions of d with every part <= max_part, lexicographically descending.
inline void partitions_into(int d, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out)
{
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(d, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(d - part, part, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int d, int max_part)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_into(d, max_part, cur, out);
    return out;
}

inline bool swap_invariant(const MPoly& p, int r)
{
    for (int i = 1; i < r; ++i) {
        std::map<VarId, MPoly> swap_xy = {
            {VarId::x(i), MPoly::variable(VarId::x(i + 1))},
            {VarId::x(i + 1), MPoly::variable(VarId::x(i))},
        };
        if (!(p.substitute(swap_xy) == p))
            return false;
    }
    return true;
}

} // namespace detail

// Writes a symmetric, homogeneous p of degree d <= r as the unique
// polynomial in G(1)..G(r) that maps back to p under G(k) -> x1^k+...+xr^k.
inline MPoly power_sum_decompose(const MPoly& p, int r)
{
    if (p.is_zero())
        return MPoly::zero();

    int degree = -1;
    for (const auto& [m, c] : p.terms()) {
        int total = 0;
        for (const auto& [v, e] : m) {
            if (v.family != VarFamily::X ||
                v.index > static_cast<std::uint32_t>(r))
                throw Error("power_sum_decompose: input must live in x1..x" +
                            std::to_string(r));
            total += e;
        }
        if (degree == -1)
            degree = total;
        else if (degree != total)
            throw Error("power_sum_decompose: input is not homogeneous");
    }
    if (degree > r)
        throw Error("power_sum_decompose: degree " + std::to_string(degree) +
                    " exceeds variable count " + std::to_string(r));
    if (!detail::swap_invariant(p, r))
        throw Error("power_sum_decompose: input is not symmetric");

    // Candidate basis: G-monomials indexed by partitions of the degree.
    auto parts = detail::partitions(degree, r);
    std::vector<MPoly> expanded; // image in x-variables
    expanded.reserve(parts.size());
    for (const auto& lambda : parts) {
        MPoly prod = MPoly::constant(1);
        for (int part : lambda)
            prod = prod * power_sum(part, r);
        expanded.push_back(prod);
    }

    // Collect the x-monomials that occur anywhere.
    std::map<Monomial, std::size_t, TermOrder> row_of;
    auto note_rows = [&row_of](const MPoly& q) {
        for (const auto& [m, c] : q.terms())
            if (!row_of.count(m))
                row_of.emplace(m, row_of.size());
    };
    for (const auto& q : expanded)
        note_rows(q);
    note_rows(p);

    std::size_t rows = row_of.size(), cols = parts.size();
    std::vector<std::vector<Rat>> aug(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [m, c] : expanded[j].terms())
            aug[row_of.at(m)][j] = c;
    for (const auto& [m, c] : p.terms())
        aug[row_of.at(m)][cols] = c;

    // Gaussian elimination; the system has a unique solution for d <= r.
    std::vector<std::size_t> pivot_row(cols, rows);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && aug[pr][col] == 0)
            ++pr;
        if (pr == rows)
            continue;
        std::swap(aug[rank], aug[pr]);
        Rat inv = 1 / aug[rank][col];
        for (std::size_t j = col; j <= cols; ++j)
            aug[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || aug[i][col] == 0)
                continue;
            Rat f = aug[i][col];
            for (std::size_t j = col; j <= cols; ++j)
                aug[i][j] -= f * aug[rank][j];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (aug[i][cols] != 0)
            throw Error("power_sum_decompose: inconsistent system (input not "
                        "symmetric?)");
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_row[col] == rows)
            throw Error("power_sum_decompose: underdetermined system");

    MPoly result;
    for (std::size_t col = 0; col < cols; ++col) {
        Rat c = aug[pivot_row[col]][cols];
        if (c == 0)
            continue;
        std::map<std::uint32_t, int> mult;
        for (int part : parts[col])
            mult[static_cast<std::uint32_t>(part)] += 1;
        Monomial m;
        for (const auto& [k, e] : mult)
            m.emplace_back(VarId::G(k), e);
        result.add_term(m, c);
    }
    return result;
}

} // namespace chordweave
