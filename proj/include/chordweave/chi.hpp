#pragma once

// Character evaluations chi_{G(3)} and chi_{F(4)} on the subalgebra
// generated by t and the odd generators x3, x5, ...; chi is the graded
// algebra homomorphism with t -> t and x_n -> c_n t^n.

#include "mpoly.hpp"
#include "rational.hpp"

namespace chordweave {

enum class ChiAlgebra { G3, F4 };

inline Rat chi_g3_coeff(int n)
{
    if (n < 1 || n % 2 == 0)
        throw Error("chi_g3_coeff needs odd n >= 1");
    // (3 + 2^(n+1) + 5*(-1)^(n+1)) / 6; n odd makes the sign term +5.
    Rat p2 = rat_pow(Rat(2), n + 1);
    return (Rat(3) + p2 + Rat(5)) / 6;
}

inline Rat chi_f4_coeff(int n)
{
    if (n < 1 || n % 2 == 0)
        throw Error("chi_f4_coeff needs odd n >= 1");
    // (8 + 2^(n+1) + 8 + 27*(-2/3)^(n+1)) / 16; n+1 even makes the last
    // term positive.
    Rat p2 = rat_pow(Rat(2), n + 1);
    Rat p23 = rat_pow(rat(2, 3), n + 1);
    return (Rat(16) + p2 + Rat(27) * p23) / 16;
}

inline Rat chi_coeff(ChiAlgebra which, int n)
{
    return which == ChiAlgebra::G3 ? chi_g3_coeff(n) : chi_f4_coeff(n);
}

// Applies the homomorphism to a polynomial in t and odd x-indices >= 3.
inline MPoly chi_eval(const MPoly& e, ChiAlgebra which)
{
    std::map<VarId, MPoly> bindings;
    for (VarId v : e.vars()) {
        if (v == VarId::t())
            continue;
        if (v.family != VarFamily::X || v.index < 3 || v.index % 2 == 0)
            throw Error("chi_eval: expression must use only t and odd x_n "
                        "with n >= 3, got " + var_name(v));
        bindings[v] = chi_coeff(which, static_cast<int>(v.index)) *
                      MPoly::variable(VarId::t(), static_cast<int>(v.index));
    }
    return e.substitute(bindings);
}

} // namespace chordweave
