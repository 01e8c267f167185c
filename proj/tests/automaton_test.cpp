#include <catch_amalgamated.hpp>

#include <random>

#include <mealy/automaton.hpp>
#include <mealy/hanoi.hpp>

#include "oracles.hpp"

using namespace mealy;

namespace {

StateId gen(std::size_t m, Letter i, Letter j) { return hanoi_state(m, {i, j}); }

Automaton identity_machine()
{
    return Automaton(3, {"q"}, {0, 0, 0}, {1, 2, 3});
}

} // namespace

TEST_CASE("validate reports completeness and invertibility")
{
    SECTION("HA_4 is complete and invertible")
    {
        auto d = validate(hanoi_automaton(4));
        CHECK(d.complete);
        CHECK(d.invertible);
        CHECK(d.offending.empty());
    }
    SECTION("single identity state")
    {
        auto d = validate(identity_machine());
        CHECK(d.complete);
        CHECK(d.invertible);
    }
    SECTION("non-permutation row")
    {
        Automaton a(2, {"s"}, {0, 0}, {1, 1});
        auto d = validate(a);
        CHECK(d.complete);
        CHECK_FALSE(d.invertible);
        REQUIRE(d.offending.size() == 1);
        CHECK(d.offending[0].state == 0);
        CHECK_FALSE(a.invertible());
        // still usable for action
        CHECK(apply(a, StateWord{0}, LetterWord{2, 2}) == LetterWord{1, 1});
        CHECK_THROWS_AS(induced_permutation(a, StateWord{0}), std::invalid_argument);
    }
    SECTION("missing entries")
    {
        Automaton a(2, {"s", "t"}, {1, kNoState, 1, 1}, {2, kNoLetter, 1, 2});
        auto d = validate(a);
        CHECK_FALSE(d.complete);
        CHECK_FALSE(d.invertible);
        CHECK(d.offending.size() == 3);
        CHECK(apply(a, StateWord{0}, LetterWord{1}) == LetterWord{2});
        CHECK_THROWS_AS(apply(a, StateWord{0}, LetterWord{2}), std::domain_error);
    }
}

TEST_CASE("constructor rejects malformed tables")
{
    CHECK_THROWS_AS(Automaton(0, {"s"}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {"s"}, {0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {"s", "s"}, {0, 0, 0, 0}, {1, 2, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {"s.t"}, {0, 0}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {"s"}, {3, 0}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, {"s"}, {0, 0}, {1, 3}), std::invalid_argument);
}

TEST_CASE("apply uses the left action")
{
    auto ha = hanoi_automaton(4);
    CHECK(apply(ha, StateWord{gen(4, 1, 2)}, LetterWord{1, 3, 4}) == LetterWord{2, 3, 4});
    CHECK(apply(ha, StateWord{0}, LetterWord{3, 1, 4, 2}) == LetterWord{3, 1, 4, 2});
    // a(2,3) acts first: 2 -> 3, then a(1,2) leaves 3 alone.
    CHECK(apply(ha, StateWord{gen(4, 1, 2), gen(4, 2, 3)}, LetterWord{2}) == LetterWord{3});
    CHECK(apply(ha, StateWord{}, LetterWord{1, 2}) == LetterWord{1, 2});
    CHECK(apply(ha, StateWord{gen(4, 1, 2)}, LetterWord{}) == LetterWord{});
    CHECK_THROWS_AS(apply(ha, StateWord{0}, LetterWord{5}), std::out_of_range);
    CHECK_THROWS_AS(apply(ha, StateWord{0}, LetterWord{0}), std::out_of_range);
    CHECK_THROWS_AS(apply(ha, StateWord{99}, LetterWord{1}), std::out_of_range);
}

TEST_CASE("section_state")
{
    auto ha = hanoi_automaton(4);
    const StateId a12 = gen(4, 1, 2);
    CHECK(section_state(ha, a12, LetterWord{1}) == 0);
    CHECK(section_state(ha, a12, LetterWord{3}) == a12);
    CHECK(section_state(ha, 0, LetterWord{1, 2, 3, 4, 1}) == 0);
    CHECK(section_state(ha, a12, LetterWord{}) == a12);
    CHECK_THROWS_AS(section_state(ha, a12, LetterWord{7}), std::out_of_range);
}

TEST_CASE("section_word")
{
    auto ha = hanoi_automaton(4);
    const StateId a12 = gen(4, 1, 2), a13 = gen(4, 1, 3);
    CHECK(section_word(ha, StateWord{a12, a13}, LetterWord{1}) == StateWord{a12, 0});
    StateWord w{a12, a13, gen(4, 2, 4)};
    CHECK(section_word(ha, w, LetterWord{}) == w);
    CHECK(section_word(ha, StateWord{0, 0, 0}, LetterWord{4, 2, 1, 3}) == StateWord{0, 0, 0});
    CHECK_THROWS_AS(section_word(ha, w, LetterWord{9}), std::out_of_range);
}

TEST_CASE("induced_permutation")
{
    auto ha = hanoi_automaton(4);
    const StateId a12 = gen(4, 1, 2);
    CHECK(induced_permutation(ha, StateWord{a12}) == LetterPermutation{2, 1, 3, 4});
    CHECK(induced_permutation(ha, StateWord{0}) == LetterPermutation{1, 2, 3, 4});
    CHECK(is_identity_permutation(induced_permutation(ha, StateWord{a12, a12})));
}

TEST_CASE("cascade_simulate")
{
    auto ha = hanoi_automaton(4);
    const StateId a12 = gen(4, 1, 2), a13 = gen(4, 1, 3);
    // a(1,3) turns 1 into 3 and becomes e; a(1,2) passes 3 and stays.
    auto r = cascade_simulate(ha, StateWord{a12, a13}, LetterWord{1});
    CHECK(r.output == LetterWord{3});
    CHECK(r.final_config == StateWord{a12, 0});

    StateWord w{a12, a13};
    auto empty = cascade_simulate(ha, w, LetterWord{});
    CHECK(empty.output.empty());
    CHECK(empty.final_config == w);

    auto triv = cascade_simulate(ha, StateWord{0}, LetterWord{4});
    CHECK(triv.output == LetterWord{4});
    CHECK(triv.final_config == StateWord{0});
}

TEST_CASE("action and section identities on random words")
{
    std::mt19937_64 rng(20260101);
    for (std::size_t m : {3u, 4u, 5u}) {
        auto ha = hanoi_automaton(m);
        auto states = oracle::all_states(ha);
        for (int trial = 0; trial < 400; ++trial) {
            auto w1 = oracle::random_word(rng, states, 8);
            auto w2 = oracle::random_word(rng, states, 8);
            auto v = oracle::random_letters(rng, m, 12);
            auto u = oracle::random_letters(rng, m, 6);
            auto w12 = concat(w1, w2);

            CHECK(apply(ha, w12, v) == apply(ha, w1, apply(ha, w2, v)));
            CHECK(section_word(ha, w12, v) == concat(section_word(ha, w1, apply(ha, w2, v)), section_word(ha, w2, v)));
            CHECK(section_word(ha, w1, concat(v, u)) == section_word(ha, section_word(ha, w1, v), u));
            CHECK(apply(ha, w1, v).size() == v.size());
            CHECK(section_word(ha, w1, v).size() == w1.size());

            auto c = cascade_simulate(ha, w1, v);
            CHECK(c.final_config == section_word(ha, w1, v));
            CHECK(c.output == apply(ha, w1, v));
        }
    }
}

TEST_CASE("apply is a bijection on words of each length")
{
    std::mt19937_64 rng(7);
    for (std::size_t m : {3u, 4u}) {
        auto ha = hanoi_automaton(m);
        auto states = oracle::all_states(ha);
        for (int trial = 0; trial < 10; ++trial) {
            auto w = oracle::random_word(rng, states, 6, 1);
            for (std::size_t L = 0; L <= 4; ++L) {
                std::set<LetterWord> images;
                auto words = oracle::all_letter_words(m, L);
                for (const auto& v : words)
                    images.insert(apply(ha, w, v));
                CHECK(images.size() == words.size());
            }
        }
    }
}
