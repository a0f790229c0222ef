#pragma once

// Tabulated weight functions f_1..f_r for the coloring weight systems.
// f_i is defined on {0,...,d_max}.

#include "rational.hpp"
#include "util.hpp"

#include <vector>

namespace chordweave {

class ColorWeightTable {
public:
    ColorWeightTable(int r, int d_max) : table_(r, std::vector<Rat>(d_max + 1))
    {
        if (r < 1)
            throw Error("need at least one color");
    }

    // f_i(k) = base_i^k
    static ColorWeightTable geometric(const std::vector<Rat>& bases, int d_max)
    {
        ColorWeightTable t(static_cast<int>(bases.size()), d_max);
        for (std::size_t i = 0; i < bases.size(); ++i)
            for (int k = 0; k <= d_max; ++k)
                t.set(static_cast<int>(i), k, rat_pow(bases[i], k));
        return t;
    }

    // f_i = 1 for every i
    static ColorWeightTable ones(int r, int d_max)
    {
        ColorWeightTable t(r, d_max);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k <= d_max; ++k)
                t.set(i, k, Rat(1));
        return t;
    }

    int colors() const { return static_cast<int>(table_.size()); }
    int d_max() const { return static_cast<int>(table_[0].size()) - 1; }

    void set(int i, int k, const Rat& value) { table_.at(i).at(k) = value; }

    const Rat& operator()(int i, int k) const
    {
        if (i < 0 || i >= colors())
            throw Error("color index out of range");
        if (k < 0 || k > d_max())
            throw Error("table-range: f" + std::to_string(i + 1) +
                        " not defined at " + std::to_string(k));
        return table_[i][k];
    }

private:
    std::vector<std::vector<Rat>> table_;
};

} // namespace chordweave
