#include <catch2/catch_amalgamated.hpp>

#include <chordweave/power_sums.hpp>

#include <random>

using namespace chordweave;

namespace {

std::map<VarId, MPoly> power_sum_bindings(int r)
{
    std::map<VarId, MPoly> out;
    for (int k = 1; k <= r; ++k)
        out[VarId::G(k)] = power_sum(k, r);
    return out;
}

// Random symmetric polynomial of homogeneous degree d in r variables,
// built from the power-sum generators themselves.
MPoly random_symmetric(std::mt19937& rng, int d, int r)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    MPoly p;
    for (const auto& lambda : detail::partitions(d, r)) {
        MPoly prod = MPoly::constant(Rat(coef(rng)));
        for (int part : lambda)
            prod = prod * power_sum(part, r);
        p += prod;
    }
    return p;
}

} // namespace

TEST_CASE("power sum decomposition examples")
{
    CHECK(power_sum_decompose(MPoly::parse("2*x1*x2"), 2).render() ==
          "G1^2 - G2");
    for (int r = 1; r <= 4; ++r)
        for (int d = 1; d <= r; ++d)
            CHECK(power_sum_decompose(power_sum(d, r), r) ==
                  MPoly::variable(VarId::G(d)));
    CHECK(power_sum_decompose(MPoly::zero(), 3).is_zero());
}

TEST_CASE("decomposition errors")
{
    CHECK_THROWS_AS(power_sum_decompose(MPoly::parse("x1"), 2),
                    Error); // not symmetric
    CHECK_THROWS_AS(power_sum_decompose(MPoly::parse("x1^3 + x2^3"), 2),
                    Error); // degree exceeds r
    CHECK_THROWS_AS(power_sum_decompose(MPoly::parse("x1^2 + x2^2 + x1 + x2"), 2),
                    Error); // not homogeneous
}

TEST_CASE("decompose then substitute is the identity")
{
    std::mt19937 rng(3);
    for (int r = 1; r <= 4; ++r) {
        for (int d = 1; d <= r; ++d) {
            for (int trial = 0; trial < 5; ++trial) {
                MPoly p = random_symmetric(rng, d, r);
                MPoly q = power_sum_decompose(p, r);
                CHECK(q.substitute(power_sum_bindings(r)) == p);
            }
        }
    }
}
