// report.hpp -- CSV renderings of growth tables and claim checks

#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "automaton.hpp"
#include "growth.hpp"
#include "star.hpp"
#include "text_format.hpp"

namespace mealy {

inline constexpr std::string_view kGrowthCsvHeader = "n,depth,theta,depth_witness,theta_witness,words_examined,seconds";
inline constexpr std::string_view kClaimCsvHeader = "n,word,t_star,bound,pass";

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

inline std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted)
        throw std::invalid_argument("unterminated quote in CSV line");
    return fields;
}

} // namespace detail

/// One row per length, ordered by n. The seconds column stays empty unless
/// @p with_timing, so untimed output depends only on the computed values.
inline std::string depth_table_csv(const GrowthReport& report, const Automaton& a, bool with_timing = false)
{
    std::string out(kGrowthCsvHeader);
    out += '\n';
    for (const auto& r : report.rows) {
        out += std::to_string(r.n) + ',' + std::to_string(r.depth) + ',' + std::to_string(r.theta) + ',';
        out += detail::csv_field(render_state_word(r.depth_witness, a)) + ',';
        out += detail::csv_field(render_state_word(r.theta_witness, a)) + ',';
        out += std::to_string(r.words_examined) + ',';
        if (with_timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

/// Reads rows written by depth_table_csv (used to resume interrupted runs).
inline std::vector<GrowthRow> parse_depth_table_csv(std::string_view text, const Automaton& a)
{
    std::vector<GrowthRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kGrowthCsvHeader)
        throw std::invalid_argument("not a growth table: unexpected header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto f = detail::split_csv_line(line);
        if (f.size() != 7)
            throw std::invalid_argument("growth table row with " + std::to_string(f.size()) + " fields");
        GrowthRow r;
        r.n = std::stoull(f[0]);
        r.depth = std::stoull(f[1]);
        r.theta = std::stoull(f[2]);
        r.depth_witness = parse_state_word(f[3], a);
        r.theta_witness = parse_state_word(f[4], a);
        r.words_examined = std::stoull(f[5]);
        r.seconds = f[6].empty() ? 0.0 : std::stod(f[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::string claim_csv(const ClaimReport& report, const Automaton& ha)
{
    std::string out(kClaimCsvHeader);
    out += '\n';
    for (const auto& s : report.samples) {
        out += std::to_string(s.n) + ',' + detail::csv_field(render_state_word(s.word, ha)) + ',';
        out += s.t_star ? std::to_string(*s.t_star) : std::string("inf");
        out += ',' + std::to_string(s.bound) + ',' + (s.pass ? "true" : "false") + '\n';
    }
    return out;
}

} // namespace mealy
