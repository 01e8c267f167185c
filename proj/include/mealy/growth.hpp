// growth.hpp -- exhaustive depth d(n) and section growth theta(n)
//
// d(n) and theta(n) are maxima of word depth and section count over all state
// words of length at most n. Two reductions keep the enumeration small, both
// value preserving:
//   * trivial states are skipped; inserting one anywhere in a word carries it
//     unchanged through every section, so depth and count stay the same;
//   * only the lexicographically least word of each orbit under the letter
//     automorphisms is measured (orderly generation: a prefix that some
//     automorphism makes smaller can never extend to an orbit minimum).
//
// Witnesses are shortlex least: the shortest word attaining the maximum, least
// by state index among those. Both reductions and any thread count give the
// same witness.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "automaton.hpp"
#include "closure.hpp"
#include "symmetry.hpp"

namespace mealy {

struct GrowthRow {
    std::size_t n = 0;
    std::size_t depth = 0;
    StateWord depth_witness;
    std::size_t theta = 0;
    StateWord theta_witness;
    /// Words measured at this length: orbit representatives when symmetry is on.
    std::uint64_t words_examined = 0;
    double seconds = 0.0;

    bool operator==(const GrowthRow&) const = default;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool complete = true;
    std::string stop_reason;
    /// Order of the symmetry group used for orbit reduction (1 = none).
    std::size_t symmetry_order = 1;

    std::vector<std::size_t> depths() const
    {
        std::vector<std::size_t> d;
        for (const auto& r : rows)
            d.push_back(r.depth);
        return d;
    }

    std::vector<std::size_t> thetas() const
    {
        std::vector<std::size_t> t;
        for (const auto& r : rows)
            t.push_back(r.theta);
        return t;
    }
};

struct GrowthOptions {
    bool use_symmetry = true;
    bool include_trivial_state = false;
    /// Count the word itself (its section at the empty input) in theta.
    bool count_empty_section = true;
    unsigned jobs = 1;
    /// Lengths whose raw word count (|alphabet|^n) exceeds this need long_run.
    std::uint64_t word_budget = 100'000'000;
    bool long_run = false;
    /// Completed rows 1..k from an earlier run; enumeration resumes at k + 1.
    std::vector<GrowthRow> resume;
    /// Called after each completed length.
    std::function<void(const GrowthRow&)> on_row;
};

namespace detail {

struct Best {
    std::size_t value = 0;
    StateWord witness;
    bool set = false;

    void offer(std::size_t v, std::span<const StateId> w)
    {
        if (!set || v > value || (v == value && std::lexicographical_compare(w.begin(), w.end(), witness.begin(), witness.end()))) {
            value = v;
            witness.assign(w.begin(), w.end());
            set = true;
        }
    }

    void merge(const Best& other)
    {
        if (other.set)
            offer(other.value, other.witness);
    }
};

// Orderly generation of orbit-minimal words over the ranks 0..k-1 of the
// enumerated states, with automorphisms given as rank maps.
class OrbitWalker {
public:
    OrbitWalker(std::size_t k, const std::vector<std::vector<std::uint32_t>>& maps) : k_(k), maps_(&maps) {}

    /// Rank words of length @p len that are orbit minima among their prefixes.
    std::vector<std::vector<std::uint32_t>> prefixes(std::size_t len) const
    {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<std::uint32_t> word(len);
        std::vector<std::vector<std::uint32_t>> stab(len + 1);
        all(stab[0]);
        auto collect = [&](const std::vector<std::uint32_t>& w) { out.push_back(w); };
        walk(word, stab, 0, len, collect);
        return out;
    }

    /// Visits every orbit-minimal word of length @p len extending @p prefix.
    template <typename Visit>
    void extend(const std::vector<std::uint32_t>& prefix, std::size_t len, Visit&& visit) const
    {
        std::vector<std::uint32_t> word(len);
        std::vector<std::vector<std::uint32_t>> stab(len + 1);
        all(stab[0]);
        for (std::size_t d = 0; d < prefix.size(); ++d) {
            word[d] = prefix[d];
            if (!narrow(stab[d], prefix[d], stab[d + 1]))
                return;
        }
        walk(word, stab, prefix.size(), len, visit);
    }

private:
    void all(std::vector<std::uint32_t>& s) const
    {
        s.resize(maps_->size());
        for (std::uint32_t g = 0; g < s.size(); ++g)
            s[g] = g;
    }

    // False when some automorphism in @p stab maps the extended prefix below itself.
    bool narrow(const std::vector<std::uint32_t>& stab, std::uint32_t c, std::vector<std::uint32_t>& next) const
    {
        next.clear();
        for (std::uint32_t g : stab) {
            std::uint32_t gc = (*maps_)[g][c];
            if (gc < c)
                return false;
            if (gc == c)
                next.push_back(g);
        }
        return true;
    }

    template <typename Visit>
    void walk(std::vector<std::uint32_t>& word, std::vector<std::vector<std::uint32_t>>& stab, std::size_t d,
              std::size_t len, Visit& visit) const
    {
        if (d == len) {
            visit(word);
            return;
        }
        for (std::uint32_t c = 0; c < k_; ++c) {
            if (!narrow(stab[d], c, stab[d + 1]))
                continue;
            word[d] = c;
            walk(word, stab, d + 1, len, visit);
        }
    }

    std::size_t k_;
    const std::vector<std::vector<std::uint32_t>>* maps_;
};

inline std::uint64_t saturating_power(std::uint64_t base, std::size_t exp)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

} // namespace detail

/// d(n) and theta(n) for n = 1..n_max; partial when the word budget stops it.
inline GrowthReport section_growth(const Automaton& a, std::size_t n_max, const GrowthOptions& opts = {})
{
    require_invertible(a);
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");

    std::vector<StateId> alphabet;
    for (StateId s = 0; s < a.state_count(); ++s)
        if (opts.include_trivial_state || !a.is_trivial(s))
            alphabet.push_back(s);

    std::vector<std::size_t> rank(a.state_count(), kNoState);
    for (std::size_t r = 0; r < alphabet.size(); ++r)
        rank[alphabet[r]] = r;

    std::vector<std::vector<std::uint32_t>> maps;
    if (opts.use_symmetry) {
        for (const auto& g : letter_automorphisms(a)) {
            std::vector<std::uint32_t> mp(alphabet.size());
            for (std::size_t r = 0; r < alphabet.size(); ++r)
                mp[r] = static_cast<std::uint32_t>(rank[g.states[alphabet[r]]]);
            maps.push_back(std::move(mp));
        }
    }

    GrowthReport report;
    report.symmetry_order = maps.size() + 1;

    detail::Best depth_best, theta_best;
    std::size_t start = 1;
    for (const auto& row : opts.resume) {
        if (row.n != start || row.n > n_max)
            throw std::invalid_argument("resume rows must be consecutive lengths starting at 1");
        report.rows.push_back(row);
        depth_best = {row.depth, row.depth_witness, true};
        theta_best = {row.theta, row.theta_witness, true};
        ++start;
    }

    const unsigned jobs = std::max(1u, opts.jobs);
    detail::OrbitWalker walker(alphabet.size(), maps);

    for (std::size_t n = start; n <= n_max; ++n) {
        const std::uint64_t raw = detail::saturating_power(alphabet.size(), n);
        if (raw > opts.word_budget && !opts.long_run) {
            report.complete = false;
            report.stop_reason = "length " + std::to_string(n) + " needs " + std::to_string(raw) +
                                 " words before reduction, above the budget of " + std::to_string(opts.word_budget) +
                                 "; rerun with the long-run gate";
            break;
        }
        const auto t0 = std::chrono::steady_clock::now();

        std::size_t prefix_len = 0;
        if (jobs > 1) {
            while (prefix_len < n && walker.prefixes(prefix_len).size() < 32u * jobs)
                ++prefix_len;
        }
        const auto tasks = walker.prefixes(prefix_len);

        struct Partial {
            detail::Best depth, theta;
            std::uint64_t examined = 0;
        };
        std::vector<Partial> partials(jobs);
        std::atomic<std::size_t> next_task{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto work = [&](unsigned id) {
            try {
                SectionExplorer ex(a);
                StateWord word(n);
                Partial& p = partials[id];
                for (std::size_t t = next_task++; t < tasks.size(); t = next_task++) {
                    walker.extend(tasks[t], n, [&](const std::vector<std::uint32_t>& ranks) {
                        for (std::size_t i = 0; i < n; ++i)
                            word[i] = alphabet[ranks[i]];
                        ex.explore(word);
                        ++p.examined;
                        p.depth.offer(ex.depth(), word);
                        p.theta.offer(opts.count_empty_section || ex.root_recurs() ? ex.count() : ex.count() - 1, word);
                    });
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        };

        if (jobs == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned id = 0; id < jobs; ++id)
                pool.emplace_back(work, id);
            for (auto& th : pool)
                th.join();
        }
        if (failure)
            std::rethrow_exception(failure);

        detail::Best depth_n, theta_n;
        std::uint64_t examined = 0;
        for (const auto& p : partials) {
            depth_n.merge(p.depth);
            theta_n.merge(p.theta);
            examined += p.examined;
        }
        // A strictly larger value at length n replaces the shorter witness.
        if (depth_n.set && (!depth_best.set || depth_n.value > depth_best.value))
            depth_best = depth_n;
        if (theta_n.set && (!theta_best.set || theta_n.value > theta_best.value))
            theta_best = theta_n;

        GrowthRow row;
        row.n = n;
        row.depth = depth_best.value;
        row.depth_witness = depth_best.witness;
        row.theta = theta_best.value;
        row.theta_witness = theta_best.witness;
        row.words_examined = examined;
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.rows.push_back(row);
        if (opts.on_row)
            opts.on_row(row);
    }
    return report;
}

/// d(n) for n = 1..n_max (theta is computed alongside).
inline GrowthReport depth_function(const Automaton& a, std::size_t n_max, const GrowthOptions& opts = {})
{
    return section_growth(a, n_max, opts);
}

/// theta(n) for n = 1..n_max (d is computed alongside).
inline GrowthReport growth_function(const Automaton& a, std::size_t n_max, const GrowthOptions& opts = {})
{
    return section_growth(a, n_max, opts);
}

} // namespace mealy
