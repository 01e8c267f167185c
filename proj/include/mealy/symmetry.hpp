// symmetry.hpp -- letter relabelings that are automorphisms of an automaton
//
// A pair (pi, sigma) of a letter permutation and a state permutation with
//   out(sigma(s), pi(x)) = pi(out(s, x))   and   next(sigma(s), pi(x)) = sigma(next(s, x))
// maps sections to sections: sigma(w)|_{pi(v)} = sigma(w|_v). Depth and section
// count are therefore constant on sigma-orbits of state words.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "automaton.hpp"

namespace mealy {

struct Automorphism {
    LetterPermutation letters;  ///< letters[x - 1] = pi(x)
    std::vector<StateId> states;  ///< states[s] = sigma(s)

    StateWord operator()(std::span<const StateId> w) const
    {
        StateWord r(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            r[i] = states[w[i]];
        return r;
    }
};

/// Largest alphabet for which automorphisms are searched (m! candidates).
inline constexpr std::size_t kMaxSymmetryAlphabet = 8;

/**
 * Non-identity automorphisms whose letter part is a permutation of the alphabet.
 *
 * For each letter permutation the state map is forced when output rows are
 * pairwise distinct; permutations that leave a state ambiguous are skipped.
 * Any subset of automorphisms is sound for orbit reduction, so skipping only
 * costs speed. Returns nothing for alphabets above kMaxSymmetryAlphabet.
 */
inline std::vector<Automorphism> letter_automorphisms(const Automaton& a)
{
    std::vector<Automorphism> result;
    const std::size_t m = a.alphabet_size();
    const std::size_t n = a.state_count();
    if (!a.complete() || m > kMaxSymmetryAlphabet)
        return result;

    // states grouped by output row; a permuted row must match exactly one state
    std::map<std::vector<Letter>, std::vector<StateId>> by_row;
    for (StateId s = 0; s < n; ++s) {
        std::vector<Letter> row(m);
        for (Letter x = 1; x <= m; ++x)
            row[x - 1] = a.out(s, x);
        by_row[row].push_back(s);
    }
    std::set<std::vector<StateId>> seen;

    LetterPermutation pi(m);
    std::iota(pi.begin(), pi.end(), Letter{1});
    std::vector<Letter> row(m);
    do {
        std::vector<StateId> sigma(n, kNoState);
        bool ok = true;
        for (StateId s = 0; ok && s < n; ++s) {
            // t must satisfy out(t, pi x) = pi out(s, x)
            for (Letter x = 1; x <= m; ++x)
                row[pi[x - 1] - 1] = pi[a.out(s, x) - 1];
            auto it = by_row.find(row);
            ok = it != by_row.end() && it->second.size() == 1;
            if (ok)
                sigma[s] = it->second.front();
        }
        if (!ok)
            continue;
        std::vector<bool> hit(n, false);
        for (StateId s = 0; ok && s < n; ++s) {
            ok = !hit[sigma[s]];
            hit[sigma[s]] = true;
        }
        for (StateId s = 0; ok && s < n; ++s)
            for (Letter x = 1; ok && x <= m; ++x)
                ok = a.next(sigma[s], pi[x - 1]) == sigma[a.next(s, x)];
        if (!ok)
            continue;
        bool identity = true;
        for (StateId s = 0; s < n; ++s)
            identity = identity && sigma[s] == s;
        if (!identity && seen.insert(sigma).second)
            result.push_back({pi, std::move(sigma)});
    } while (std::next_permutation(pi.begin(), pi.end()));
    return result;
}

} // namespace mealy
