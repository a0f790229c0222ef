#include <catch2/catch_amalgamated.hpp>

#include <chordweave/hseries.hpp>

#include <random>

using namespace chordweave;

TEST_CASE("exponential expansion examples")
{
    MPoly p = MPoly::parse("2*y - y^-1");
    HSeries s = expand_exponential(p, {{VarId::y(), rat(1, 2)}}, 2);
    CHECK(s[0] == 1);
    CHECK(s[1] == rat(3, 2));
    CHECK(s[2] == rat(1, 8));

    HSeries one = expand_exponential(MPoly::constant(1), {}, 4);
    CHECK(one == HSeries::one(4));

    MPoly cancel = MPoly::variable(VarId::y()) * MPoly::variable(VarId::y(), -1);
    CHECK(expand_exponential(cancel, {{VarId::y(), rat(1, 2)}}, 3) ==
          HSeries::one(3));

    CHECK_THROWS_AS(expand_exponential(MPoly::parse("t"), {}, 2), Error);
}

TEST_CASE("expansion is multiplicative on laurent monomials")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> expo(-3, 3), coef(-3, 3);
    std::map<VarId, Rat> rules = {{VarId::y(), rat(1, 2)},
                                  {VarId::a(), rat(-3, 2)}};
    for (int trial = 0; trial < 30; ++trial) {
        Monomial m1, m2;
        int e1 = expo(rng), e2 = expo(rng);
        if (e1 != 0)
            m1.emplace_back(VarId::y(), e1);
        if (e2 != 0)
            m2.emplace_back(VarId::a(), e2);
        MPoly p = MPoly::term(Rat(coef(rng)), m1);
        MPoly q = MPoly::term(Rat(coef(rng)), m2);
        HSeries lhs = expand_exponential(p * q, rules, 5);
        HSeries rhs = expand_exponential(p, rules, 5) *
                      expand_exponential(q, rules, 5);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series arithmetic")
{
    HSeries e = HSeries::exp_ch(Rat(1), 6);
    HSeries em = HSeries::exp_ch(Rat(-1), 6);
    CHECK(e * em == HSeries::one(6));
    CHECK(e.inverse() == em);
    CHECK(e.pow(-2) == HSeries::exp_ch(Rat(-2), 6));

    HSeries z(4);
    CHECK_THROWS_AS(z.inverse(), Error);

    // combining truncates at the smaller order
    HSeries a(2), b(5);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
}

TEST_CASE("general series evaluation handles inverses")
{
    // a - a^-1 with a = exp(h): 2*sinh(h)
    MPoly p = MPoly::variable(VarId::a()) - MPoly::variable(VarId::a(), -1);
    HSeries s = series_eval(p, {{VarId::a(), HSeries::exp_ch(Rat(1), 5)}}, 5);
    CHECK(s[0] == 0);
    CHECK(s[1] == 2);
    CHECK(s[2] == 0);
    CHECK(s[3] == rat(1, 3));
}
