#include <catch2/catch_amalgamated.hpp>

#include <chordweave/chromatic.hpp>
#include <chordweave/four_term.hpp>
#include <chordweave/state_weights.hpp>

using namespace chordweave;

namespace {

template <typename F>
bool annihilates(const FourTermQuadruple& q, F&& w)
{
    auto val = [&](int i) { return w(q.d[i]); };
    return val(0) - val(1) - val(2) + val(3) == decltype(val(0)){};
}

} // namespace

TEST_CASE("quadruple shape")
{
    auto quads = generate_4T(2);
    CHECK(!quads.empty());
    for (int n = 2; n <= 4; ++n)
        for (const FourTermQuadruple& q : generate_4T(n))
            for (const ChordDiagram& d : q.d)
                CHECK(d.degree() == n);
    CHECK_THROWS_AS(generate_4T(1), Error);
    CHECK_THROWS_AS(generate_4T(6), Error);
}

TEST_CASE("circle count weight system annihilates every quadruple")
{
    for (int n = 2; n <= 4; ++n)
        for (const FourTermQuadruple& q : generate_4T(n))
            CHECK(annihilates(q, [](const ChordDiagram& d) { return w_gl(d); }));
}

TEST_CASE("weight systems vanish on 4T relations")
{
    for (int n = 2; n <= 3; ++n) {
        for (const FourTermQuadruple& q : generate_4T(n)) {
            CHECK(annihilates(q, [](const ChordDiagram& d) { return w_so(d); }));
            CHECK(annihilates(q,
                              [](const ChordDiagram& d) { return gamma_bar(d); }));
            CHECK(annihilates(
                q, [](const ChordDiagram& d) { return w21_embeddings(d); }));
            for (int r = 1; r <= 3; ++r)
                CHECK(annihilates(
                    q, [r](const ChordDiagram& d) { return w_rx(d, r); }));
        }
    }
}
