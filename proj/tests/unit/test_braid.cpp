#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinlab/braid.hpp"
#include "skeinlab/corpus.hpp"

#include <random>

using namespace skeinlab;

TEST_CASE("parsing the word grammar") {
    CHECK(parse_braid("1 1 1") == BraidWord{2, {1, 1, 1}});
    CHECK(parse_braid("1^3") == BraidWord{2, {1, 1, 1}});
    CHECK(parse_braid("B3: 1 1 1") == BraidWord{3, {1, 1, 1}});
    CHECK(parse_braid("-2 1 -2") == BraidWord{3, {-2, 1, -2}});
    CHECK(parse_braid("1,2,-1") == BraidWord{3, {1, 2, -1}});
    CHECK(parse_braid("B4: 2^-3 1") == BraidWord{4, {-2, -2, -2, 1}});
    CHECK(parse_braid("-1^2") == BraidWord{2, {-1, -1}});
    CHECK(parse_braid("-1^-2") == BraidWord{2, {1, 1}});
    CHECK(parse_braid("B1:") == BraidWord{1, {}});
    CHECK(parse_braid("") == BraidWord{1, {}});
    CHECK(parse_braid("b5: 4") == BraidWord{5, {4}});
}

TEST_CASE("parse errors carry the offending position") {
    CHECK_THROWS_AS(parse_braid("1 x 2"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("0"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("1^0"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("B3: 5"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("B3 1 2"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("B0: 1"), BraidParseError);
    CHECK_THROWS_AS(parse_braid("1^^2"), BraidParseError);
    try {
        parse_braid("1 1 oops");
        FAIL("expected a parse error");
    } catch (const BraidParseError& e) {
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("rendering round-trips through the parser") {
    CHECK(render_braid(parse_braid("1 1 1")) == "B2: 1^3");
    CHECK(render_braid(parse_braid("B4: 2^-3 1")) == "B4: -2^3 1");
    CHECK(render_braid(parse_braid("-2 1 -2")) == "B3: -2 1 -2");
    CHECK(render_braid(BraidWord{3, {}}) == "B3:");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const BraidWord w = random_word(rng, 6, 12);
        CHECK(parse_braid(render_braid(w)) == w);
    }
}

TEST_CASE("writhe and syllables") {
    CHECK(writhe(parse_braid("1 1 1")) == 3);
    CHECK(writhe(parse_braid("1 -2 1 -2")) == 0);
    CHECK(writhe(BraidWord{4, {}}) == 0);

    const auto syl = syllables(parse_braid("B3: 1 1 -2 -2 -2 1"));
    REQUIRE(syl.size() == 3);
    CHECK(syl[0] == Syllable{1, 2});
    CHECK(syl[1] == Syllable{2, -3});
    CHECK(syl[2] == Syllable{1, 1});

    // Cancellation cascades through free reduction.
    const auto red = syllables(parse_braid("B3: 1 2 -2 -1 2"));
    REQUIRE(red.size() == 1);
    CHECK(red[0] == Syllable{2, 1});
}

TEST_CASE("permutations and closure components") {
    const Perm id = Perm::identity(4);
    CHECK(id.cycle_count() == 4);
    CHECK(id(3) == 3);

    const Perm p = braid_permutation(parse_braid("B3: 1 2"));
    CHECK(p.cycle_count() == 1);
    CHECK(component_count(parse_braid("B3: 1 2")) == 1);
    CHECK(component_count(parse_braid("B3: 1")) == 2);
    CHECK(component_count(BraidWord{3, {}}) == 3);
    CHECK(component_count(parse_braid("1 1")) == 2);
    CHECK(component_count(parse_braid("1 1 1")) == 1);

    // Sign of the letter never matters for the permutation.
    CHECK(braid_permutation(parse_braid("B3: -1 -2")).img ==
          braid_permutation(parse_braid("B3: 1 2")).img);
    CHECK(braid_permutation(parse_braid("B3: 1 2")).preimage(1) == 3);
}

TEST_CASE("word surgery") {
    const BraidWord w = parse_braid("B3: 1 -2 1");
    CHECK(mirror(w) == parse_braid("B3: -1 2 -1"));
    CHECK(mirror(mirror(w)) == w);

    CHECK(stabilize(w, +1) == parse_braid("B4: 1 -2 1 3"));
    CHECK(stabilize(w, -1) == parse_braid("B4: 1 -2 1 -3"));

    CHECK(cyclic_shift(w, 1) == parse_braid("B3: -2 1 1"));
    CHECK(cyclic_shift(w, 3) == w);
    CHECK(cyclic_shift(w, -1) == parse_braid("B3: 1 1 -2"));

    CHECK(concat(w, parse_braid("B3: 2")) == parse_braid("B3: 1 -2 1 2"));
    CHECK_THROWS_AS(concat(w, parse_braid("1 1")), std::invalid_argument);

    CHECK(generator_power(2, -3, 4) == parse_braid("B4: -2 -2 -2"));
    CHECK(generator_power(1, 0, 3) == BraidWord{3, {}});
}

TEST_CASE("torus words") {
    CHECK(torus_word(3, 2) == parse_braid("1 1 1"));
    CHECK(torus_word(-3, 2) == parse_braid("-1 -1 -1"));
    CHECK(torus_word(0, 4) == BraidWord{4, {}});
    CHECK(render_braid(torus_word(5, 4)) == "B4: 3 2 1 3 2 1 3 2 1 3 2 1 3 2 1");
    CHECK(writhe(torus_word(5, 4)) == 15);
    CHECK(component_count(torus_word(4, 2)) == 2);
    CHECK(component_count(torus_word(5, 2)) == 1);
}

TEST_CASE("strand-range extraction") {
    const BraidWord w = parse_braid("B4: 1 2 3 -2 1");
    CHECK(psi(1, 4, w) == parse_braid("B3: 1 2 -1"));
    CHECK(psi(0, 2, w) == parse_braid("1 1"));
    CHECK(psi(0, 4, w) == w);
    CHECK(psi(3, 4, w) == BraidWord{1, {}});
    CHECK_THROWS_AS(psi(2, 1, w), std::invalid_argument);
}
