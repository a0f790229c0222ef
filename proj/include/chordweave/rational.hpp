#pragma once

// Exact rational scalars. GMP's mpq_class keeps values canonical
// (gcd(|num|, den) = 1, den > 0), which is exactly the invariant we need.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chordweave {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& text)
{
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r)
{
    return r.get_str();
}

inline bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

inline Rat rat_pow(const Rat& base, long exp)
{
    if (exp == 0)
        return Rat(1);
    if (base == 0 && exp < 0)
        throw std::domain_error("inverse of zero");
    Rat acc(1);
    Rat b = exp > 0 ? base : Rat(1 / base);
    for (long i = 0, n = exp > 0 ? exp : -exp; i < n; ++i)
        acc *= b;
    return acc;
}

} // namespace chordweave
