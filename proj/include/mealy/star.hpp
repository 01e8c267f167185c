// star.hpp -- executable checks for the depth estimate of Hanoi automata
//
// A state word has property (*) when all of its states fix a common letter x.
// Such a word never changes at x, so its sections at v only depend on v with
// every x removed. The estimate says that for a word of length n over HA_m,
// every section at an input of length >= C_m * L^(m-2) has property (*), with
// C_m = 3^2 * 4^2 * ... * m^2 and L the least integer strictly greater than
// log2(n).

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "automaton.hpp"
#include "closure.hpp"
#include "hanoi.hpp"

namespace mealy {

/// Least integer strictly greater than log2(n): floor(log2 n) + 1, so 8 -> 4.
inline std::size_t strict_log2(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("log of zero");
    return static_cast<std::size_t>(std::bit_width(n));
}

/// 3^2 * 4^2 * ... * m^2, saturating.
inline std::uint64_t claim_constant(std::size_t m)
{
    std::uint64_t c = 1;
    for (std::uint64_t k = 3; k <= m; ++k) {
        if (c > std::numeric_limits<std::uint64_t>::max() / (k * k))
            return std::numeric_limits<std::uint64_t>::max();
        c *= k * k;
    }
    return c;
}

/// C_m * strict_log2(n)^(m-2), saturating.
inline std::uint64_t claim_bound(std::size_t m, std::uint64_t n)
{
    if (m < 3)
        throw std::invalid_argument("the estimate needs m >= 3");
    std::uint64_t b = claim_constant(m);
    const std::uint64_t L = strict_log2(n);
    for (std::size_t i = 0; i + 2 < m; ++i) {
        if (b > std::numeric_limits<std::uint64_t>::max() / L)
            return std::numeric_limits<std::uint64_t>::max();
        b *= L;
    }
    return b;
}

/// Bit x-1 set when @p s fixes letter x. Alphabets above 64 letters are rejected.
inline std::uint64_t fixed_letters(const Automaton& a, StateId s)
{
    if (a.alphabet_size() > 64)
        throw std::invalid_argument("fixed-letter masks support at most 64 letters");
    std::uint64_t mask = 0;
    for (Letter x = 1; x <= a.alphabet_size(); ++x)
        if (a.out(s, x) == x)
            mask |= std::uint64_t{1} << (x - 1);
    return mask;
}

inline std::uint64_t fixed_letters(const Automaton& a, std::span<const StateId> w)
{
    std::uint64_t mask = a.alphabet_size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.alphabet_size()) - 1;
    for (StateId s : w)
        mask &= fixed_letters(a, s);
    return mask;
}

/// The smallest letter fixed by every state of @p w, if any.
inline std::optional<Letter> property_star(const Automaton& a, std::span<const StateId> w)
{
    detail::check_states(a, w);
    std::uint64_t mask = fixed_letters(a, w);
    if (mask == 0)
        return std::nullopt;
    return static_cast<Letter>(std::countr_zero(mask) + 1);
}

inline LetterWord strip_fixed_letter(std::span<const Letter> v, Letter x)
{
    LetterWord u;
    u.reserve(v.size());
    for (Letter y : v)
        if (y != x)
            u.push_back(y);
    return u;
}

/// Fewest consecutive blocks of @p w that each have property (*). Greedy is
/// optimal because every subword of a (*) block is again a (*) block.
inline std::size_t star_block_count(const Automaton& a, std::span<const StateId> w)
{
    detail::check_states(a, w);
    std::size_t blocks = 0;
    std::uint64_t current = 0;
    for (StateId s : w) {
        std::uint64_t f = fixed_letters(a, s);
        if (blocks > 0 && (current & f) != 0) {
            current &= f;
            continue;
        }
        ++blocks;
        current = f;
        if (current == 0)
            throw std::domain_error("state '" + a.name(s) + "' fixes no letter; no (*) partition exists");
    }
    return blocks;
}

/**
 * Least t such that every section of @p c at every input of length >= t has
 * property (*); nullopt when sections without (*) occur at arbitrarily long
 * inputs.
 *
 * Sections at inputs of length exactly L are the ends of length-L walks from
 * the root in the closure graph. Restricted to nodes that can reach a section
 * without (*), that graph must be acyclic for t to exist, and then t is one
 * more than its longest root-to-bad path.
 */
inline std::optional<std::size_t> star_threshold(const Automaton& a, const SectionClosure& c)
{
    const std::size_t N = c.count();
    const std::size_t m = c.alphabet_size;
    std::vector<char> bad(N);
    for (std::size_t i = 0; i < N; ++i)
        bad[i] = fixed_letters(a, c.sections[i]) == 0;

    // Nodes that reach a bad node: reverse reachability.
    std::vector<std::vector<std::uint32_t>> parents(N);
    for (std::size_t i = 0; i < N; ++i)
        for (Letter x = 1; x <= m; ++x)
            parents[c.child(i, x)].push_back(static_cast<std::uint32_t>(i));
    std::vector<char> reaches(N, 0);
    std::vector<std::uint32_t> stack;
    for (std::size_t i = 0; i < N; ++i)
        if (bad[i]) {
            reaches[i] = 1;
            stack.push_back(static_cast<std::uint32_t>(i));
        }
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto p : parents[u])
            if (!reaches[p]) {
                reaches[p] = 1;
                stack.push_back(p);
            }
    }
    if (!reaches[0])
        return 0;

    // Longest path to a bad node inside the reaching subgraph, with cycle detection.
    constexpr long kNone = -1;
    std::vector<char> color(N, 0);  // 0 new, 1 on stack, 2 done
    std::vector<long> longest(N, kNone);
    struct Frame {
        std::uint32_t node;
        Letter next_letter;
    };
    std::vector<Frame> frames{{0, 1}};
    color[0] = 1;
    longest[0] = bad[0] ? 0 : kNone;
    while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.next_letter > m) {
            color[f.node] = 2;
            frames.pop_back();
            continue;
        }
        std::uint32_t u = f.node;
        std::uint32_t v = c.child(u, f.next_letter++);
        if (!reaches[v])
            continue;
        if (color[v] == 1)
            return std::nullopt;
        if (color[v] == 0) {
            color[v] = 1;
            longest[v] = bad[v] ? 0 : kNone;
            frames.push_back({v, 1});
            // Revisit this edge once v is finished.
            --frames[frames.size() - 2].next_letter;
            continue;
        }
        if (longest[v] != kNone)
            longest[u] = std::max(longest[u], longest[v] + 1);
    }
    return static_cast<std::size_t>(longest[0]) + 1;
}

struct ClaimSample {
    std::size_t n = 0;
    StateWord word;
    std::optional<std::size_t> t_star;
    std::uint64_t bound = 0;
    bool pass = false;
};

struct ClaimReport {
    std::size_t pegs = 0;
    std::vector<ClaimSample> samples;

    bool all_pass() const
    {
        for (const auto& s : samples)
            if (!s.pass)
                return false;
        return true;
    }

    /// Largest finite t* among samples of length @p n; nullopt if one was unbounded.
    std::optional<std::size_t> max_t_star(std::size_t n) const
    {
        std::size_t best = 0;
        for (const auto& s : samples) {
            if (s.n != n)
                continue;
            if (!s.t_star)
                return std::nullopt;
            best = std::max(best, *s.t_star);
        }
        return best;
    }
};

/// t* for random words of length @p n over the non-trivial states of HA_m,
/// checked against claim_bound(m, n).
inline ClaimReport verify_claim(std::size_t m, std::size_t n, std::size_t samples, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("word length must be at least 1");
    const Automaton ha = hanoi_automaton(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<StateId> pick(1, static_cast<StateId>(ha.state_count() - 1));
    SectionExplorer ex(ha);
    ClaimReport report;
    report.pegs = m;
    const std::uint64_t bound = claim_bound(m, n);
    for (std::size_t i = 0; i < samples; ++i) {
        ClaimSample s;
        s.n = n;
        s.word.resize(n);
        for (auto& st : s.word)
            st = pick(rng);
        ex.explore(s.word);
        s.t_star = star_threshold(ha, to_closure(ex));
        s.bound = bound;
        s.pass = s.t_star && *s.t_star <= bound;
        report.samples.push_back(std::move(s));
    }
    return report;
}

} // namespace mealy
