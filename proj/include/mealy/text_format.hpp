// text_format.hpp -- reading and writing automata, letter words and state words
//
// Automaton files:
//     alphabet <m>
//     states <name_0> <name_1> ...
//     <state> <in-letter> -> <next-state> <out-letter>     (one per state x letter)
// '#' starts a comment. Transition lines may come in any order.
//
// Letter words use contiguous digits when m <= 9 ("134") and space separated
// decimals otherwise ("10 3 12"). State words are state names joined by '.'.

#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "automaton.hpp"

namespace mealy {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(format(line, column, what)), line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& what)
    {
        std::string s;
        if (line > 0)
            s += "line " + std::to_string(line) + ", ";
        s += "column " + std::to_string(column) + ": " + what;
        return s;
    }

    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

inline bool parse_unsigned(std::string_view s, std::size_t& value)
{
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace detail

inline Automaton parse_automaton(std::istream& in)
{
    std::size_t m = 0;
    std::vector<std::string> names;
    std::vector<StateId> next;
    std::vector<Letter> out;
    bool have_alphabet = false, have_states = false;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = detail::tokenize(line);
        if (tok.empty())
            continue;

        if (!have_alphabet) {
            if (tok[0].text != "alphabet" || tok.size() != 2)
                throw parse_error(lineno, tok[0].column, "expected 'alphabet <m>'");
            if (!detail::parse_unsigned(tok[1].text, m) || m == 0 || m >= 65535u)
                throw parse_error(lineno, tok[1].column, "invalid alphabet size");
            have_alphabet = true;
            continue;
        }
        if (!have_states) {
            if (tok[0].text != "states" || tok.size() < 2)
                throw parse_error(lineno, tok[0].column, "expected 'states <name> ...'");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                std::string nm(tok[i].text);
                if (nm.find('.') != std::string::npos)
                    throw parse_error(lineno, tok[i].column, "state names may not contain '.'");
                for (const auto& other : names)
                    if (other == nm)
                        throw parse_error(lineno, tok[i].column, "duplicate state '" + nm + "'");
                names.push_back(std::move(nm));
            }
            next.assign(names.size() * m, kNoState);
            out.assign(names.size() * m, kNoLetter);
            have_states = true;
            continue;
        }

        if (tok.size() != 5 || tok[2].text != "->")
            throw parse_error(lineno, tok[0].column, "expected '<state> <letter> -> <state> <letter>'");
        auto lookup = [&](const detail::Token& t) {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == t.text)
                    return static_cast<StateId>(i);
            throw parse_error(lineno, t.column, "unknown state '" + std::string(t.text) + "'");
        };
        auto letter = [&](const detail::Token& t) {
            std::size_t x = 0;
            if (!detail::parse_unsigned(t.text, x) || x < 1 || x > m)
                throw parse_error(lineno, t.column, "letter '" + std::string(t.text) + "' outside 1.." + std::to_string(m));
            return static_cast<Letter>(x);
        };
        StateId s = lookup(tok[0]);
        Letter x = letter(tok[1]);
        StateId t = lookup(tok[3]);
        Letter y = letter(tok[4]);
        std::size_t slot = s * m + (x - 1);
        if (next[slot] != kNoState)
            throw parse_error(lineno, tok[0].column, "duplicate entry for (" + names[s] + ", " + std::to_string(x) + ")");
        next[slot] = t;
        out[slot] = y;
    }

    if (!have_alphabet || !have_states)
        throw parse_error(lineno, 1, "missing 'alphabet' or 'states' header");
    for (std::size_t s = 0; s < names.size(); ++s)
        for (std::size_t x = 1; x <= m; ++x)
            if (next[s * m + (x - 1)] == kNoState)
                throw parse_error(lineno, 1, "missing entry for (" + names[s] + ", " + std::to_string(x) + ")");
    return Automaton(m, std::move(names), std::move(next), std::move(out));
}

inline Automaton parse_automaton(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_automaton(in);
}

/// Canonical text: states in index order, letters ascending.
inline std::string emit_automaton(const Automaton& a)
{
    std::string s = "alphabet " + std::to_string(a.alphabet_size()) + "\nstates";
    for (const auto& nm : a.names())
        s += " " + nm;
    s += "\n";
    for (std::size_t si = 0; si < a.state_count(); ++si) {
        auto st = static_cast<StateId>(si);
        for (Letter x = 1; x <= a.alphabet_size(); ++x) {
            s += a.name(st) + " " + std::to_string(x) + " -> ";
            StateId t = a.next(st, x);
            s += (t == kNoState ? std::string("?") : a.name(t));
            s += " " + std::to_string(a.out(st, x)) + "\n";
        }
    }
    return s;
}

/// Digits for m <= 9 (whitespace between digits tolerated), decimal tokens otherwise.
inline LetterWord parse_letter_word(std::string_view text, std::size_t alphabet_size)
{
    LetterWord v;
    if (alphabet_size <= 9) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == ' ' || c == '\t')
                continue;
            if (c < '1' || static_cast<std::size_t>(c - '0') > alphabet_size)
                throw parse_error(0, i + 1, std::string("'") + c + "' is not a letter of 1.." + std::to_string(alphabet_size));
            v.push_back(static_cast<Letter>(c - '0'));
        }
        return v;
    }
    for (const auto& t : detail::tokenize(text)) {
        std::size_t x = 0;
        if (!detail::parse_unsigned(t.text, x) || x < 1 || x > alphabet_size)
            throw parse_error(0, t.column, "'" + std::string(t.text) + "' is not a letter of 1.." + std::to_string(alphabet_size));
        v.push_back(static_cast<Letter>(x));
    }
    return v;
}

inline std::string render_letter_word(std::span<const Letter> v, std::size_t alphabet_size)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (alphabet_size > 9 && i > 0)
            s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

namespace detail {

// "a(j,i)" -> "a(i,j)" when i < j; empty when the token has another shape.
inline std::string swapped_pair_name(std::string_view tok)
{
    if (tok.size() < 6 || tok.substr(0, 2) != "a(" || tok.back() != ')')
        return {};
    auto body = tok.substr(2, tok.size() - 3);
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
        return {};
    std::size_t i = 0, j = 0;
    if (!parse_unsigned(body.substr(0, comma), i) || !parse_unsigned(body.substr(comma + 1), j))
        return {};
    return "a(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

} // namespace detail

/// Names joined by '.'; the empty string is the empty word. Generator names
/// of the form a(j,i) also resolve to a(i,j).
inline StateWord parse_state_word(std::string_view text, const Automaton& a)
{
    StateWord w;
    std::size_t start = 0;
    while (start < text.size() && (text[start] == ' ' || text[start] == '\t'))
        ++start;
    std::size_t end = text.size();
    while (end > start && (text[end - 1] == ' ' || text[end - 1] == '\t'))
        --end;
    if (start == end)
        return w;
    std::size_t pos = start;
    while (true) {
        std::size_t dot = text.find('.', pos);
        std::size_t stop = (dot == std::string_view::npos || dot > end) ? end : dot;
        auto tok = text.substr(pos, stop - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        auto s = a.find_state(tok);
        if (!s) {
            auto alt = detail::swapped_pair_name(tok);
            if (!alt.empty())
                s = a.find_state(alt);
        }
        if (!s)
            throw parse_error(0, pos + 1, "unknown generator '" + std::string(tok) + "'");
        w.push_back(*s);
        if (stop == end)
            break;
        pos = stop + 1;
    }
    return w;
}

inline std::string render_state_word(std::span<const StateId> w, const Automaton& a)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            s += '.';
        s += a.name(w[i]);
    }
    return s;
}

} // namespace mealy
