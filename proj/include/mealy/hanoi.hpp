// hanoi.hpp -- the Hanoi Towers automata and the game they model
//
// HA_m has the trivial state e plus one state a(i,j) per pair i < j of pegs.
// a(i,j) swaps the first occurrence of i or j in a word and then becomes e;
// every other letter passes through unchanged with a(i,j) staying put.
//
// A configuration of k disks is a word of length k whose i-th letter is the
// peg holding the i-th smallest disk, so a(i,j) moves the top disk among pegs
// i and j onto the other one.

#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "automaton.hpp"

namespace mealy {

struct Transposition {
    Letter i;
    Letter j;

    Transposition(Letter a, Letter b) : i(a < b ? a : b), j(a < b ? b : a)
    {
        if (a == b)
            throw std::invalid_argument("a transposition needs two distinct pegs");
    }

    bool operator==(const Transposition&) const = default;
    auto operator<=>(const Transposition&) const = default;
};

inline std::string generator_name(Transposition t)
{
    return "a(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

/// State index of a(i,j) in hanoi_automaton(pegs): e is 0, pairs follow in
/// lexicographic order (1,2), (1,3), ..., (1,m), (2,3), ...
inline StateId hanoi_state(std::size_t pegs, Transposition t)
{
    if (t.j > pegs)
        throw std::out_of_range("peg " + std::to_string(t.j) + " exceeds " + std::to_string(pegs));
    std::size_t before = 0;
    for (std::size_t r = 1; r < t.i; ++r)
        before += pegs - r;
    return static_cast<StateId>(1 + before + (t.j - t.i - 1));
}

inline Automaton hanoi_automaton(std::size_t pegs)
{
    if (pegs < 3)
        throw std::invalid_argument("Hanoi automata need at least 3 pegs");
    if (pegs > 255)
        throw std::invalid_argument("too many pegs");
    std::vector<std::string> names{"e"};
    for (Letter i = 1; i <= pegs; ++i)
        for (Letter j = i + 1; j <= pegs; ++j)
            names.push_back(generator_name({i, j}));

    const std::size_t n = names.size();
    std::vector<StateId> next(n * pegs);
    std::vector<Letter> out(n * pegs);
    for (Letter x = 1; x <= pegs; ++x) {
        next[x - 1] = 0;
        out[x - 1] = x;
    }
    for (Letter i = 1; i <= pegs; ++i)
        for (Letter j = i + 1; j <= pegs; ++j) {
            StateId s = hanoi_state(pegs, {i, j});
            for (Letter x = 1; x <= pegs; ++x) {
                std::size_t slot = s * pegs + (x - 1);
                if (x == i || x == j) {
                    next[slot] = 0;
                    out[slot] = (x == i) ? j : i;
                } else {
                    next[slot] = s;
                    out[slot] = x;
                }
            }
        }
    return Automaton(pegs, std::move(names), std::move(next), std::move(out));
}

/// Number of pegs of a Hanoi automaton built by hanoi_automaton().
inline std::size_t hanoi_pegs(const Automaton& ha)
{
    std::size_t m = ha.alphabet_size();
    if (m < 3 || ha.state_count() != 1 + m * (m - 1) / 2 || ha.name(0) != "e")
        throw std::invalid_argument("not a Hanoi automaton");
    return m;
}

/// Moves that change @p config: a(i,j) with peg i or j occupied.
inline std::vector<Transposition> legal_moves(std::span<const Letter> config, std::size_t pegs)
{
    std::vector<bool> occupied(pegs + 1, false);
    for (Letter x : config) {
        if (x < 1 || x > pegs)
            throw std::out_of_range("peg " + std::to_string(x) + " outside 1.." + std::to_string(pegs));
        occupied[x] = true;
    }
    std::vector<Transposition> moves;
    for (Letter i = 1; i <= pegs; ++i)
        for (Letter j = i + 1; j <= pegs; ++j)
            if (occupied[i] || occupied[j])
                moves.emplace_back(i, j);
    return moves;
}

namespace detail {

// Moves are collected in chronological order; the state word lists them in
// reverse because the rightmost state acts first.
inline StateWord moves_to_word(const std::vector<Transposition>& moves, std::size_t pegs)
{
    StateWord w;
    w.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it)
        w.push_back(hanoi_state(pegs, *it));
    return w;
}

inline void three_peg_moves(std::size_t disks, Letter from, Letter to, Letter via, std::vector<Transposition>& moves)
{
    if (disks == 0)
        return;
    three_peg_moves(disks - 1, from, via, to, moves);
    moves.emplace_back(from, to);
    three_peg_moves(disks - 1, via, to, from, moves);
}

} // namespace detail

/// The classical 2^k - 1 move solution moving k disks between two of the pegs 1..3.
inline StateWord solve_3peg(const Automaton& ha, std::size_t disks, Letter from, Letter to)
{
    std::size_t pegs = hanoi_pegs(ha);
    if (from < 1 || from > 3 || to < 1 || to > 3 || from == to)
        throw std::invalid_argument("solve_3peg needs distinct pegs among 1..3");
    if (disks >= 40)
        throw std::invalid_argument("too many disks for an explicit move list");
    Letter via = static_cast<Letter>(6 - from - to);
    std::vector<Transposition> moves;
    moves.reserve((std::size_t{1} << disks) - 1);
    detail::three_peg_moves(disks, from, to, via, moves);
    return detail::moves_to_word(moves, pegs);
}

/**
 * Frame-Stewart move counts and splits for up to @p pegs pegs and @p disks disks.
 * With 3 pegs the count is 2^k - 1; with more pegs the top k1 disks go to a spare
 * peg, the remaining k - k1 use one peg fewer, and the k1 disks follow. Ties pick
 * the smallest k1.
 */
class FrameStewartTable {
public:
    FrameStewartTable(std::size_t pegs, std::size_t disks) : disks_(disks)
    {
        if (pegs < 3)
            throw std::invalid_argument("Frame-Stewart needs at least 3 pegs");
        cost_.assign((pegs + 1) * (disks + 1), 0);
        split_.assign((pegs + 1) * (disks + 1), 0);
        for (std::size_t k = 0; k <= disks; ++k)
            at(cost_, 3, k) = k >= 64 ? kInf : (std::uint64_t{1} << k) - 1;
        for (std::size_t p = 4; p <= pegs; ++p) {
            for (std::size_t k = 0; k <= disks; ++k) {
                if (k <= 1) {
                    at(cost_, p, k) = k;
                    continue;
                }
                std::uint64_t best = kInf;
                std::uint32_t best_split = 1;
                for (std::size_t k1 = 1; k1 < k; ++k1) {
                    std::uint64_t c = add(add(at(cost_, p, k1), at(cost_, p, k1)), at(cost_, p - 1, k - k1));
                    if (c < best) {
                        best = c;
                        best_split = static_cast<std::uint32_t>(k1);
                    }
                }
                at(cost_, p, k) = best;
                at(split_, p, k) = best_split;
            }
        }
    }

    std::uint64_t moves(std::size_t pegs, std::size_t disks) const { return cost_.at(pegs * (disks_ + 1) + disks); }
    std::size_t split(std::size_t pegs, std::size_t disks) const { return split_.at(pegs * (disks_ + 1) + disks); }

    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

private:
    std::uint64_t& at(std::vector<std::uint64_t>& v, std::size_t p, std::size_t k) { return v[p * (disks_ + 1) + k]; }
    std::uint32_t& at(std::vector<std::uint32_t>& v, std::size_t p, std::size_t k) { return v[p * (disks_ + 1) + k]; }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a > kInf - b) ? kInf : a + b; }

    std::size_t disks_;
    std::vector<std::uint64_t> cost_;
    std::vector<std::uint32_t> split_;
};

inline std::uint64_t frame_stewart_length(std::size_t pegs, std::size_t disks)
{
    return FrameStewartTable(pegs, disks).moves(pegs, disks);
}

namespace detail {

inline void frame_stewart_moves(const FrameStewartTable& table, std::vector<Letter> avail, std::size_t disks,
                                Letter from, Letter to, std::vector<Transposition>& moves)
{
    if (disks == 0)
        return;
    Letter spare = 0;
    for (Letter p : avail)
        if (p != from && p != to) {
            spare = p;
            break;
        }
    if (avail.size() == 3) {
        three_peg_moves(disks, from, to, spare, moves);
        return;
    }
    if (disks == 1) {
        moves.emplace_back(from, to);
        return;
    }
    std::size_t top = table.split(avail.size(), disks);
    frame_stewart_moves(table, avail, top, from, spare, moves);
    std::vector<Letter> fewer;
    for (Letter p : avail)
        if (p != spare)
            fewer.push_back(p);
    frame_stewart_moves(table, fewer, disks - top, from, to, moves);
    frame_stewart_moves(table, avail, top, spare, to, moves);
}

} // namespace detail

/// A Frame-Stewart solution moving k disks from peg 1 to peg m of @p ha.
inline StateWord frame_stewart(const Automaton& ha, std::size_t disks)
{
    std::size_t pegs = hanoi_pegs(ha);
    FrameStewartTable table(pegs, disks);
    if (table.moves(pegs, disks) > (std::uint64_t{1} << 32))
        throw std::invalid_argument("solution too long for an explicit move list");
    std::vector<Letter> avail;
    for (Letter p = 1; p <= pegs; ++p)
        avail.push_back(p);
    std::vector<Transposition> moves;
    moves.reserve(table.moves(pegs, disks));
    detail::frame_stewart_moves(table, avail, disks, 1, static_cast<Letter>(pegs), moves);
    return detail::moves_to_word(moves, pegs);
}

} // namespace mealy
