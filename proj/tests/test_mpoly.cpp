#include <catch2/catch_amalgamated.hpp>

#include <chordweave/mpoly.hpp>
#include <chordweave/rational.hpp>

#include <random>

using namespace chordweave;

namespace {

MPoly v(VarId id, int e = 1) { return MPoly::variable(id, e); }

// Small random Laurent-free polynomials for property tests.
MPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-4, 4), nterms(1, 4), expo(0, 3);
    std::vector<VarId> pool{VarId::t(), VarId::x(1), VarId::x(2), VarId::s(1)};
    MPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        for (VarId var : pool) {
            int e = expo(rng);
            if (e > 0 && rng() % 2 == 0)
                m.emplace_back(var, e);
        }
        p.add_term(m, Rat(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("polynomial addition")
{
    CHECK((v(VarId::t()) + (-v(VarId::t()))).is_zero());
    CHECK((v(VarId::s(1), 2) + (-v(VarId::s(2)))).render() == "s1^2 - s2");
    MPoly p = Rat(2) * v(VarId::y()) + (-v(VarId::y(), -1));
    CHECK(p.render() == "2*y - y^-1");
}

TEST_CASE("polynomial multiplication")
{
    MPoly x12 = v(VarId::x(1)) + v(VarId::x(2));
    CHECK((x12 * x12).render() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK((v(VarId::y()) * v(VarId::y(), -1)) == MPoly::constant(1));
    MPoly p = (v(VarId::a()) - v(VarId::a(), -1)) * v(VarId::z(), -1);
    CHECK(p.render() == "a*z^-1 - a^-1*z^-1");
}

TEST_CASE("laurent exponents are restricted to y, a, z")
{
    CHECK_NOTHROW(v(VarId::y(), -2));
    CHECK_THROWS_AS(v(VarId::t(), -1), Error);
    CHECK_THROWS_AS(v(VarId::x(1), -1), Error);
}

TEST_CASE("substitution")
{
    MPoly target = v(VarId::x(1), 2) + v(VarId::x(2), 2);
    CHECK(v(VarId::s(2)).substitute({{VarId::s(2), target}}) == target);

    MPoly p = v(VarId::s(1), 2) - v(VarId::s(2));
    std::map<VarId, MPoly> power_sums = {
        {VarId::s(1), v(VarId::x(1)) + v(VarId::x(2))},
        {VarId::s(2), v(VarId::x(1), 2) + v(VarId::x(2), 2)},
    };
    CHECK(p.substitute(power_sums).render() == "2*x1*x2");

    CHECK(v(VarId::t()).substitute({{VarId::t(), v(VarId::t())}}) ==
          v(VarId::t()));

    // Negative power of a non-invertible binding
    MPoly q = v(VarId::y(), -1);
    CHECK_THROWS_AS(q.substitute({{VarId::y(), v(VarId::t())}}), Error);
    MPoly multi = v(VarId::y()) + MPoly::constant(1);
    CHECK_THROWS_AS(q.substitute({{VarId::y(), multi}}), Error);
}

TEST_CASE("coeff_of")
{
    MPoly p = v(VarId::t(), 2) + Rat(3) * v(VarId::t());
    CHECK(p.coeff_of(VarId::t(), 2) == MPoly::constant(1));
    MPoly q = v(VarId::x(1)) * v(VarId::t()) + v(VarId::x(2)) * v(VarId::t());
    CHECK(q.coeff_of(VarId::t(), 1) == v(VarId::x(1)) + v(VarId::x(2)));
    CHECK(v(VarId::t()).coeff_of(VarId::t(), 5).is_zero());
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("canonical text round trip")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        MPoly p = random_poly(rng);
        CHECK(MPoly::parse(p.render()) == p);
    }
    CHECK(MPoly::parse("0").is_zero());
    CHECK(MPoly::parse("-3/2*t^2 + y^-1").render() == "-3/2*t^2 + y^-1");
    CHECK(MPoly::parse("G2*G1").render() == "G1*G2");
    CHECK_THROWS_AS(MPoly::parse("t +"), Error);
    CHECK_THROWS_AS(MPoly::parse("w"), Error);
}

TEST_CASE("rational helpers")
{
    CHECK(to_string(rat(6, -4)) == "-3/2");
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}
