// closure.hpp -- all sections of a state word, breadth first by input length
//
// Sections are state words of the same length as the root, deduplicated by
// literal equality. Level L holds the sections first reached at inputs of
// length L; the walk stops once a level adds nothing, and the index of the
// last non-empty level is the depth of the word.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "automaton.hpp"

namespace mealy {

/**
 * Reusable scratch space for closure computations. One explorer per thread;
 * explore() overwrites the previous result.
 *
 * Sections live back to back in one arena; the dedup table is open addressing
 * over section indices with cached hashes.
 */
class SectionExplorer {
public:
    explicit SectionExplorer(const Automaton& a) : a_(&a), m_(a.alphabet_size())
    {
        if (!a.complete())
            throw std::invalid_argument("section closure requires a complete automaton");
    }

    void explore(std::span<const StateId> w)
    {
        detail::check_states(*a_, w);
        n_ = w.size();
        arena_.assign(w.begin(), w.end());
        level_.assign(1, 0);
        hashes_.assign(1, hash(w.data()));
        children_.clear();
        root_recurs_ = false;
        table_.assign(64, 0);
        insert(0);

        for (std::size_t i = 0; i < level_.size(); ++i) {
            for (Letter x = 1; x <= m_; ++x) {
                const std::size_t base = level_.size() * n_;
                arena_.resize(base + n_);
                const StateId* src = arena_.data() + i * n_;
                StateId* dst = arena_.data() + base;
                Letter y = x;
                for (std::size_t k = n_; k-- > 0;) {
                    StateId s = src[k];
                    dst[k] = a_->next(s, y);
                    y = a_->out(s, y);
                }
                const std::uint64_t h = hash(dst);
                std::uint32_t child = find(dst, h);
                if (child != kAbsent) {
                    arena_.resize(base);
                } else {
                    child = static_cast<std::uint32_t>(level_.size());
                    level_.push_back(level_[i] + 1);
                    hashes_.push_back(h);
                    if (2 * level_.size() > table_.size())
                        rehash(table_.size() * 2);
                    else
                        insert(child);
                }
                children_.push_back(child);
                root_recurs_ = root_recurs_ || child == 0;
            }
        }
    }

    std::size_t word_length() const noexcept { return n_; }
    std::size_t alphabet_size() const noexcept { return m_; }
    std::size_t count() const noexcept { return level_.size(); }
    std::size_t depth() const noexcept { return level_.back(); }
    /// Whether the root word is also a section at some non-empty input.
    bool root_recurs() const noexcept { return root_recurs_; }

    std::span<const StateId> section(std::size_t i) const { return {arena_.data() + i * n_, n_}; }
    std::uint32_t level(std::size_t i) const { return level_[i]; }
    std::uint32_t child(std::size_t i, Letter x) const { return children_[i * m_ + (x - 1)]; }

private:
    static constexpr std::uint32_t kAbsent = 0xffffffffu;

    std::uint64_t hash(const StateId* w) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
        for (std::size_t k = 0; k < n_; ++k)
            h = (h ^ w[k]) * 0x100000001b3ull;
        h ^= h >> 31;
        h *= 0x9e3779b97f4a7c15ull;
        return h ^ (h >> 29);
    }

    std::uint32_t find(const StateId* w, std::uint64_t h) const noexcept
    {
        const std::size_t mask = table_.size() - 1;
        for (std::size_t slot = h & mask;; slot = (slot + 1) & mask) {
            std::uint32_t e = table_[slot];
            if (e == 0)
                return kAbsent;
            --e;
            if (hashes_[e] == h && std::equal(w, w + n_, arena_.data() + e * n_))
                return e;
        }
    }

    void insert(std::uint32_t idx) noexcept
    {
        const std::size_t mask = table_.size() - 1;
        std::size_t slot = hashes_[idx] & mask;
        while (table_[slot] != 0)
            slot = (slot + 1) & mask;
        table_[slot] = idx + 1;
    }

    void rehash(std::size_t capacity)
    {
        table_.assign(capacity, 0);
        for (std::uint32_t i = 0; i < level_.size(); ++i)
            insert(i);
    }

    const Automaton* a_;
    std::size_t m_;
    std::size_t n_ = 0;
    std::vector<StateId> arena_;
    std::vector<std::uint32_t> level_;
    std::vector<std::uint64_t> hashes_;
    std::vector<std::uint32_t> children_;
    std::vector<std::uint32_t> table_;
    bool root_recurs_ = false;
};

/// The finite set of sections of a word with its breadth-first structure.
struct SectionClosure {
    std::size_t alphabet_size = 0;
    /// Discovery order; sections[0] is the word itself.
    std::vector<StateWord> sections;
    /// Level L is sections[level_start[L] .. level_start[L+1]).
    std::vector<std::size_t> level_start;
    /// children[i * m + (x - 1)] is the index of sections[i]|_x.
    std::vector<std::uint32_t> children;
    bool root_recurs = false;

    std::size_t count() const noexcept { return sections.size(); }
    std::size_t depth() const noexcept { return level_start.size() - 2; }
    std::size_t level_count() const noexcept { return level_start.size() - 1; }
    std::span<const StateWord> level(std::size_t L) const
    {
        return std::span<const StateWord>(sections).subspan(level_start.at(L), level_start.at(L + 1) - level_start.at(L));
    }
    /// Sections at non-empty inputs only.
    std::size_t count_nonempty() const noexcept { return count() - (root_recurs ? 0 : 1); }
    std::uint32_t child(std::size_t i, Letter x) const { return children.at(i * alphabet_size + (x - 1)); }
};

inline SectionClosure to_closure(const SectionExplorer& ex)
{
    SectionClosure c;
    c.alphabet_size = ex.alphabet_size();
    c.root_recurs = ex.root_recurs();
    c.sections.reserve(ex.count());
    c.children.reserve(ex.count() * ex.alphabet_size());
    for (std::size_t i = 0; i < ex.count(); ++i) {
        auto s = ex.section(i);
        c.sections.emplace_back(s.begin(), s.end());
        if (i == 0 || ex.level(i) != ex.level(i - 1))
            c.level_start.push_back(i);
        for (Letter x = 1; x <= ex.alphabet_size(); ++x)
            c.children.push_back(ex.child(i, x));
    }
    c.level_start.push_back(ex.count());
    return c;
}

inline SectionClosure section_closure(const Automaton& a, std::span<const StateId> w)
{
    SectionExplorer ex(a);
    ex.explore(w);
    return to_closure(ex);
}

inline std::size_t word_depth(const Automaton& a, std::span<const StateId> w)
{
    SectionExplorer ex(a);
    ex.explore(w);
    return ex.depth();
}

inline std::size_t section_count(const Automaton& a, std::span<const StateId> w)
{
    SectionExplorer ex(a);
    ex.explore(w);
    return ex.count();
}

/// Whether @p w fixes every single letter.
inline bool acts_trivially_on_letters(const Automaton& a, std::span<const StateId> w)
{
    for (Letter x = 1; x <= a.alphabet_size(); ++x) {
        Letter y = x;
        for (std::size_t k = w.size(); k-- > 0;)
            y = a.out(w[k], y);
        if (y != x)
            return false;
    }
    return true;
}

/// Word problem: w is the identity iff all of its sections fix every letter.
inline bool is_identity(const Automaton& a, std::span<const StateId> w)
{
    require_invertible(a);
    SectionExplorer ex(a);
    ex.explore(w);
    for (std::size_t i = 0; i < ex.count(); ++i)
        if (!acts_trivially_on_letters(a, ex.section(i)))
            return false;
    return true;
}

} // namespace mealy
