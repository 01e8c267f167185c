// automaton.hpp -- finite Mealy automata over the alphabet {1, ..., m}
//
// States act on words from the left: a word s_1 s_2 ... s_n over states maps
// a letter word v to s_1(s_2(... s_n(v))). Sections of state words are again
// state words of the same length, compared literally (index by index).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mealy {

using Letter = std::uint16_t;   ///< 1-based alphabet letter
using StateId = std::uint32_t;  ///< index into Automaton::names()

using LetterWord = std::vector<Letter>;
using StateWord = std::vector<StateId>;

/// A permutation of {1..m}, stored as image[x - 1].
using LetterPermutation = std::vector<Letter>;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr Letter kNoLetter = 0;

/**
 * A deterministic letter-to-letter transducer with complete or partial tables.
 *
 * Entries may be left undefined (kNoState / kNoLetter); such an automaton is
 * reported as incomplete by validate() and operations that reach a missing
 * entry throw. Group-level operations additionally require invertibility.
 */
class Automaton {
public:
    Automaton() = default;

    /// @p next and @p out are row-major tables of size states x alphabet_size.
    Automaton(std::size_t alphabet_size, std::vector<std::string> names,
              std::vector<StateId> next, std::vector<Letter> out)
        : m_(alphabet_size), names_(std::move(names)), next_(std::move(next)), out_(std::move(out))
    {
        if (m_ == 0 || m_ >= std::numeric_limits<Letter>::max())
            throw std::invalid_argument("alphabet size out of range");
        if (names_.empty() || names_.size() >= kNoState)
            throw std::invalid_argument("automaton needs at least one state");
        if (next_.size() != names_.size() * m_ || out_.size() != names_.size() * m_)
            throw std::invalid_argument("transition tables do not match states x alphabet");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const auto& nm = names_[i];
            if (nm.empty() || std::any_of(nm.begin(), nm.end(), [](char c) {
                    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '.' || c == '#';
                }))
                throw std::invalid_argument("invalid state name '" + nm + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[j] == nm)
                    throw std::invalid_argument("duplicate state name '" + nm + "'");
        }
        for (auto t : next_)
            if (t != kNoState && t >= names_.size())
                throw std::invalid_argument("transition target out of range");
        for (auto y : out_)
            if (y != kNoLetter && y > m_)
                throw std::invalid_argument("output letter out of range");

        complete_ = std::none_of(next_.begin(), next_.end(), [](StateId t) { return t == kNoState; })
                    && std::none_of(out_.begin(), out_.end(), [](Letter y) { return y == kNoLetter; });
        invertible_ = complete_;
        for (std::size_t s = 0; invertible_ && s < names_.size(); ++s)
            invertible_ = row_is_permutation(static_cast<StateId>(s));
    }

    std::size_t alphabet_size() const noexcept { return m_; }
    std::size_t state_count() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(StateId s) const { return names_.at(s); }

    bool complete() const noexcept { return complete_; }
    bool invertible() const noexcept { return invertible_; }

    std::optional<StateId> find_state(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<StateId>(i);
        return std::nullopt;
    }

    /// Section of @p s at the single letter @p x; kNoState when undefined.
    StateId next(StateId s, Letter x) const noexcept { return next_[s * m_ + (x - 1)]; }
    /// Output of @p s on @p x; kNoLetter when undefined.
    Letter out(StateId s, Letter x) const noexcept { return out_[s * m_ + (x - 1)]; }

    bool row_is_permutation(StateId s) const
    {
        std::vector<bool> seen(m_ + 1, false);
        for (Letter x = 1; x <= m_; ++x) {
            Letter y = out(s, x);
            if (y == kNoLetter || seen[y])
                return false;
            seen[y] = true;
        }
        return true;
    }

    /// A state that loops on every letter and outputs its input.
    bool is_trivial(StateId s) const noexcept
    {
        for (Letter x = 1; x <= m_; ++x)
            if (next(s, x) != s || out(s, x) != x)
                return false;
        return true;
    }

    std::optional<StateId> trivial_state() const noexcept
    {
        for (std::size_t s = 0; s < names_.size(); ++s)
            if (is_trivial(static_cast<StateId>(s)))
                return static_cast<StateId>(s);
        return std::nullopt;
    }

    bool operator==(const Automaton& other) const
    {
        return m_ == other.m_ && names_ == other.names_ && next_ == other.next_ && out_ == other.out_;
    }

private:
    std::size_t m_ = 0;
    std::vector<std::string> names_;
    std::vector<StateId> next_;
    std::vector<Letter> out_;
    bool complete_ = false;
    bool invertible_ = false;
};

struct Diagnostics {
    struct Entry {
        StateId state;
        Letter letter;   ///< 0 for a whole-row (non-permutation) problem
        std::string what;
    };
    bool complete = true;
    bool invertible = true;
    std::vector<Entry> offending;
};

/// Completeness and per-state invertibility report. Never throws.
inline Diagnostics validate(const Automaton& a)
{
    Diagnostics d;
    for (std::size_t si = 0; si < a.state_count(); ++si) {
        auto s = static_cast<StateId>(si);
        for (Letter x = 1; x <= a.alphabet_size(); ++x) {
            if (a.next(s, x) == kNoState) {
                d.complete = false;
                d.offending.push_back({s, x, "missing transition"});
            }
            if (a.out(s, x) == kNoLetter) {
                d.complete = false;
                d.offending.push_back({s, x, "missing output"});
            }
        }
        if (!a.row_is_permutation(s)) {
            d.invertible = false;
            d.offending.push_back({s, 0, "output row is not a permutation"});
        }
    }
    d.invertible = d.invertible && d.complete;
    return d;
}

inline void require_invertible(const Automaton& a)
{
    if (!a.invertible())
        throw std::invalid_argument("operation requires an invertible automaton");
}

namespace detail {

inline void check_letters(const Automaton& a, std::span<const Letter> v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 1 || v[i] > a.alphabet_size())
            throw std::out_of_range("letter " + std::to_string(v[i]) + " at position " +
                                    std::to_string(i + 1) + " is outside the alphabet 1.." +
                                    std::to_string(a.alphabet_size()));
}

inline void check_states(const Automaton& a, std::span<const StateId> w)
{
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= a.state_count())
            throw std::out_of_range("state index " + std::to_string(w[i]) + " at position " +
                                    std::to_string(i + 1) + " is not a state");
}

inline StateId checked_next(const Automaton& a, StateId s, Letter x)
{
    StateId t = a.next(s, x);
    if (t == kNoState)
        throw std::domain_error("undefined transition from '" + a.name(s) + "' on " + std::to_string(x));
    return t;
}

inline Letter checked_out(const Automaton& a, StateId s, Letter x)
{
    Letter y = a.out(s, x);
    if (y == kNoLetter)
        throw std::domain_error("undefined output of '" + a.name(s) + "' on " + std::to_string(x));
    return y;
}

} // namespace detail

/// Image of @p v under the single state @p s, together with the section s|_v.
inline std::pair<LetterWord, StateId> run_state(const Automaton& a, StateId s, std::span<const Letter> v)
{
    detail::check_letters(a, v);
    detail::check_states(a, std::span<const StateId>(&s, 1));
    LetterWord image(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        image[i] = detail::checked_out(a, s, v[i]);
        s = detail::checked_next(a, s, v[i]);
    }
    return {std::move(image), s};
}

/// The end state after reading @p v from @p s (s|_v); s|_empty = s.
inline StateId section_state(const Automaton& a, StateId s, std::span<const Letter> v)
{
    return run_state(a, s, v).second;
}

/// Left action: the rightmost state of @p w is applied first.
inline LetterWord apply(const Automaton& a, std::span<const StateId> w, std::span<const Letter> v)
{
    detail::check_states(a, w);
    LetterWord cur(v.begin(), v.end());
    for (std::size_t i = w.size(); i-- > 0;)
        cur = run_state(a, w[i], cur).first;
    return cur;
}

/**
 * Section of a state word at a letter word:
 *   (s_1 ... s_n)|_v = s'_1 ... s'_n,  s'_i = s_i|_{(s_{i+1} ... s_n)(v)}.
 * Evaluated position by position, each state consuming the whole input that
 * reaches it.
 */
inline StateWord section_word(const Automaton& a, std::span<const StateId> w, std::span<const Letter> v)
{
    detail::check_states(a, w);
    StateWord result(w.size());
    LetterWord cur(v.begin(), v.end());
    for (std::size_t i = w.size(); i-- > 0;) {
        auto [image, end] = run_state(a, w[i], cur);
        result[i] = end;
        cur = std::move(image);
    }
    return result;
}

/// The permutation x -> w(x) on single letters.
inline LetterPermutation induced_permutation(const Automaton& a, std::span<const StateId> w)
{
    require_invertible(a);
    detail::check_states(a, w);
    LetterPermutation p(a.alphabet_size());
    for (Letter x = 1; x <= a.alphabet_size(); ++x) {
        Letter y = x;
        for (std::size_t i = w.size(); i-- > 0;)
            y = a.out(w[i], y);
        p[x - 1] = y;
    }
    return p;
}

inline bool is_identity_permutation(const LetterPermutation& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i + 1)
            return false;
    return true;
}

struct CascadeResult {
    LetterWord output;
    StateWord final_config;
};

/**
 * Serial wiring of |w| automaton copies: copy i starts in w[i], the output of
 * copy i+1 feeds copy i, input enters the last copy and the output of the
 * first copy is emitted. Processes the input letter by letter.
 */
inline CascadeResult cascade_simulate(const Automaton& a, std::span<const StateId> w, std::span<const Letter> v)
{
    detail::check_states(a, w);
    detail::check_letters(a, v);
    CascadeResult r{LetterWord{}, StateWord(w.begin(), w.end())};
    r.output.reserve(v.size());
    for (Letter x : v) {
        for (std::size_t i = r.final_config.size(); i-- > 0;) {
            StateId s = r.final_config[i];
            Letter y = detail::checked_out(a, s, x);
            r.final_config[i] = detail::checked_next(a, s, x);
            x = y;
        }
        r.output.push_back(x);
    }
    return r;
}

template <typename T>
std::vector<T> concat(std::span<const T> lhs, std::span<const T> rhs)
{
    std::vector<T> w(lhs.begin(), lhs.end());
    w.insert(w.end(), rhs.begin(), rhs.end());
    return w;
}

template <typename T>
std::vector<T> concat(const std::vector<T>& lhs, const std::vector<T>& rhs)
{
    return concat(std::span<const T>(lhs), std::span<const T>(rhs));
}

} // namespace mealy
