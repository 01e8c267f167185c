#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include <mealy/closure.hpp>
#include <mealy/hanoi.hpp>

#include "oracles.hpp"

using namespace mealy;

TEST_CASE("hanoi_automaton shape")
{
    auto ha3 = hanoi_automaton(3);
    CHECK(ha3.state_count() == 4);
    CHECK(ha3.names() == std::vector<std::string>{"e", "a(1,2)", "a(1,3)", "a(2,3)"});

    auto ha4 = hanoi_automaton(4);
    CHECK(ha4.state_count() == 7);
    CHECK(validate(ha4).invertible);
    CHECK(ha4.is_trivial(0));

    // Arrows of HA_4: a(i,j) leaves to e on i|j and j|i and loops on the rest.
    for (Letter i = 1; i <= 4; ++i)
        for (Letter j = i + 1; j <= 4; ++j) {
            StateId s = hanoi_state(4, {i, j});
            CHECK(ha4.name(s) == generator_name({i, j}));
            for (Letter x = 1; x <= 4; ++x) {
                if (x == i || x == j) {
                    CHECK(ha4.next(s, x) == 0);
                    CHECK(ha4.out(s, x) == (x == i ? j : i));
                } else {
                    CHECK(ha4.next(s, x) == s);
                    CHECK(ha4.out(s, x) == x);
                }
            }
        }

    CHECK(apply(ha4, StateWord{hanoi_state(4, {3, 4})}, LetterWord{3, 3, 4}) == LetterWord{4, 3, 4});
    CHECK_THROWS_AS(hanoi_automaton(2), std::invalid_argument);
    CHECK(Transposition(3, 1) == Transposition(1, 3));
    CHECK_THROWS_AS(Transposition(2, 2), std::invalid_argument);
}

TEST_CASE("state property: a moved letter leads to e, a fixed one keeps the state")
{
    for (std::size_t m = 3; m <= 6; ++m) {
        auto ha = hanoi_automaton(m);
        for (StateId s = 1; s < ha.state_count(); ++s)
            for (Letter x = 1; x <= m; ++x) {
                auto image = apply(ha, StateWord{s}, LetterWord{x});
                if (image[0] != x)
                    CHECK(section_state(ha, s, LetterWord{x}) == 0);
                else
                    CHECK(section_state(ha, s, LetterWord{x}) == s);
            }
    }
}

TEST_CASE("generators are involutions")
{
    for (std::size_t m = 3; m <= 6; ++m) {
        auto ha = hanoi_automaton(m);
        for (StateId s = 1; s < ha.state_count(); ++s)
            CHECK(is_identity(ha, StateWord{s, s}));
    }
}

TEST_CASE("generators swap the first occurrence of i or j")
{
    std::mt19937_64 rng(99);
    for (std::size_t m : {3u, 4u, 5u, 6u}) {
        auto ha = hanoi_automaton(m);
        for (int trial = 0; trial < 300; ++trial) {
            auto v = oracle::random_letters(rng, m, 15);
            for (Letter i = 1; i <= m; ++i)
                for (Letter j = i + 1; j <= m; ++j)
                    CHECK(apply(ha, StateWord{hanoi_state(m, {i, j})}, v) == oracle::hanoi_swap_first(i, j, v));
        }
    }
}

TEST_CASE("states fixing a letter form a subautomaton isomorphic to HA_{m-1}")
{
    for (std::size_t m = 4; m <= 6; ++m) {
        auto ha = hanoi_automaton(m);
        auto smaller = hanoi_automaton(m - 1);
        for (Letter fixed = 1; fixed <= m; ++fixed) {
            std::vector<StateId> sub;
            for (StateId s = 0; s < ha.state_count(); ++s)
                if (ha.out(s, fixed) == fixed)
                    sub.push_back(s);
            // closure under sections at every letter
            for (StateId s : sub)
                for (Letter x = 1; x <= m; ++x)
                    CHECK(std::find(sub.begin(), sub.end(), ha.next(s, x)) != sub.end());

            // relabel letters of X_m \ {fixed} to 1..m-1 in order, states by that relabeling
            auto relabel = [&](Letter x) { return static_cast<Letter>(x < fixed ? x : x - 1); };
            std::map<StateId, StateId> to_small;
            for (StateId s : sub) {
                if (s == 0) {
                    to_small[s] = 0;
                    continue;
                }
                Letter i = 0, j = 0;
                for (Letter x = 1; x <= m; ++x)
                    if (ha.out(s, x) != x)
                        (i == 0 ? i : j) = x;
                to_small[s] = hanoi_state(m - 1, {relabel(i), relabel(j)});
            }
            REQUIRE(sub.size() == smaller.state_count());
            std::set<StateId> image;
            for (auto [s, t] : to_small)
                image.insert(t);
            CHECK(image.size() == sub.size());
            for (StateId s : sub)
                for (Letter x = 1; x <= m; ++x) {
                    if (x == fixed)
                        continue;
                    CHECK(to_small[ha.next(s, x)] == smaller.next(to_small[s], relabel(x)));
                    CHECK(relabel(ha.out(s, x)) == smaller.out(to_small[s], relabel(x)));
                }
        }
    }
}

TEST_CASE("legal_moves")
{
    auto names = [](const std::vector<Transposition>& ts) {
        std::vector<std::string> r;
        for (auto t : ts)
            r.push_back(generator_name(t));
        return r;
    };
    CHECK(names(legal_moves(LetterWord{1, 1, 1}, 3)) == std::vector<std::string>{"a(1,2)", "a(1,3)"});
    CHECK(legal_moves(LetterWord{}, 4).empty());
    CHECK(names(legal_moves(LetterWord{1, 2}, 3)) == std::vector<std::string>{"a(1,2)", "a(1,3)", "a(2,3)"});
    CHECK_THROWS_AS(legal_moves(LetterWord{5}, 4), std::out_of_range);

    // exactly the generators that change the configuration
    std::mt19937_64 rng(3);
    auto ha = hanoi_automaton(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_letters(rng, 5, 6);
        auto legal = legal_moves(c, 5);
        for (Letter i = 1; i <= 5; ++i)
            for (Letter j = i + 1; j <= 5; ++j) {
                bool changes = apply(ha, StateWord{hanoi_state(5, {i, j})}, c) != c;
                bool listed = std::find(legal.begin(), legal.end(), Transposition(i, j)) != legal.end();
                CHECK(changes == listed);
            }
    }
}

namespace {

// Replays @p w move by move (rightmost first) checking each move is a legal disk move.
bool replays_legally(const Automaton& ha, const StateWord& w, LetterWord config)
{
    for (std::size_t k = w.size(); k-- > 0;) {
        auto moves = legal_moves(config, ha.alphabet_size());
        bool ok = false;
        for (auto t : moves)
            ok = ok || hanoi_state(ha.alphabet_size(), t) == w[k];
        if (!ok)
            return false;
        config = apply(ha, StateWord{w[k]}, config);
    }
    return true;
}

} // namespace

TEST_CASE("solve_3peg")
{
    auto ha = hanoi_automaton(3);
    auto one = solve_3peg(ha, 1, 1, 3);
    CHECK(one == StateWord{hanoi_state(3, {1, 3})});
    CHECK(solve_3peg(ha, 0, 1, 2).empty());

    auto three = solve_3peg(ha, 3, 1, 3);
    CHECK(three.size() == 7);
    CHECK(apply(ha, three, LetterWord{1, 1, 1}) == LetterWord{3, 3, 3});

    for (std::size_t k = 0; k <= 12; ++k) {
        auto w = solve_3peg(ha, k, 1, 3);
        CHECK(w.size() == (std::size_t{1} << k) - 1);
        CHECK(apply(ha, w, LetterWord(k, 1)) == LetterWord(k, 3));
        if (k <= 8)
            CHECK(replays_legally(ha, w, LetterWord(k, 1)));
    }

    // embeds in larger automata and between other pegs
    auto ha5 = hanoi_automaton(5);
    auto w = solve_3peg(ha5, 4, 2, 1);
    CHECK(apply(ha5, w, LetterWord(4, 2)) == LetterWord(4, 1));

    CHECK_THROWS_AS(solve_3peg(ha, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve_3peg(ha, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("frame_stewart")
{
    CHECK(frame_stewart(hanoi_automaton(3), 4).size() == 15);
    CHECK(frame_stewart(hanoi_automaton(4), 1).size() == 1);
    CHECK(frame_stewart(hanoi_automaton(4), 0).empty());
    CHECK_THROWS_AS(frame_stewart_length(2, 3), std::invalid_argument);

    // known 4-peg counts: 1, 3, 5, 9, 13, 17, 25, 33
    const std::vector<std::uint64_t> four{0, 1, 3, 5, 9, 13, 17, 25, 33};
    for (std::size_t k = 0; k < four.size(); ++k)
        CHECK(frame_stewart_length(4, k) == four[k]);

    auto ha4 = hanoi_automaton(4);
    auto w = frame_stewart(ha4, 5);
    CHECK(w.size() == frame_stewart_length(4, 5));
    CHECK(apply(ha4, w, LetterWord(5, 1)) == LetterWord(5, 4));
    CHECK(replays_legally(ha4, w, LetterWord(5, 1)));
}

TEST_CASE("frame_stewart matches the configuration-graph optimum")
{
    for (std::size_t m = 3; m <= 7; ++m) {
        auto ha = hanoi_automaton(m);
        std::size_t total = 1;
        for (std::size_t k = 0;; ++k) {
            if (k > 0)
                total *= m;
            if (total > 1'000'000)
                break;
            auto w = frame_stewart(ha, k);
            INFO("m=" << m << " k=" << k);
            CHECK(w.size() == oracle::optimal_moves(m, k));
            CHECK(apply(ha, w, LetterWord(k, 1)) == LetterWord(k, static_cast<Letter>(m)));
            CHECK(replays_legally(ha, w, LetterWord(k, 1)));
        }
    }
}
