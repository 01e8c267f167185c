// mealy -- command-line experiments with Mealy automata and Hanoi Towers automata
//
//   mealy gen     --pegs 4
//   mealy act     --word "a(1,2)" --input 134
//   mealy section --word "a(1,2).a(1,3)" --input 1
//   mealy wp      --word "a(1,2).a(1,2)"
//   mealy table   --pegs 4 --max-n 9
//   mealy claim   --pegs 4 --lengths 4,8,16,32 --samples 200
//   mealy solve   --pegs 4 --disks 5 --verify
//
// Data goes to stdout (or --out); progress and diagnostics go to stderr.
// Exit status: 0 success, 1 negative verdict (wp non-identity, failed claim or
// replay), 2 error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <mealy/mealy.hpp>

namespace {

using namespace mealy;

struct RunConfig {
    std::optional<std::size_t> pegs;
    std::optional<std::string> automaton_path;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::optional<std::string> out_path;
    bool csv = false;
    bool long_run = false;
    bool no_symmetry = false;
    bool include_trivial_state = false;

    std::string word;
    std::string input;
    std::size_t max_n = 0;
    std::optional<std::string> checkpoint;
    bool timing = false;
    bool exclude_empty_section = false;
    std::vector<std::size_t> lengths{4, 8, 16, 32};
    std::size_t samples = 200;
    std::size_t disks = 0;
    Letter from = 1;
    std::optional<Letter> to;
    bool verify = false;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const RunConfig& cfg, const std::string& data)
{
    if (!cfg.out_path) {
        std::cout << data << std::flush;
        return;
    }
    std::ofstream f(*cfg.out_path, std::ios::binary | std::ios::trunc);
    f << data;
    f.close();
    if (!f)
        throw std::runtime_error("cannot write " + *cfg.out_path);
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// Smallest Hanoi automaton covering the letters and generator indices mentioned
// in the arguments. Generators over pegs <= m act the same in every HA_M, M >= m.
std::size_t infer_pegs(const RunConfig& cfg)
{
    std::size_t m = 3;
    std::size_t value = 0;
    bool in_number = false;
    auto scan = [&](const std::string& s, bool digits_are_letters) {
        for (char c : s) {
            if (c >= '0' && c <= '9') {
                if (digits_are_letters)
                    m = std::max<std::size_t>(m, static_cast<std::size_t>(c - '0'));
                value = in_number ? value * 10 + static_cast<std::size_t>(c - '0') : static_cast<std::size_t>(c - '0');
                in_number = true;
            } else {
                if (in_number && !digits_are_letters)
                    m = std::max(m, value);
                in_number = false;
            }
        }
        if (in_number && !digits_are_letters)
            m = std::max(m, value);
        in_number = false;
    };
    scan(cfg.word, false);
    bool spaced = cfg.input.find(' ') != std::string::npos;
    if (spaced) {
        scan(cfg.input, false);
    } else {
        scan(cfg.input, true);
    }
    return m;
}

Automaton load_automaton(const RunConfig& cfg, bool allow_inference)
{
    if (cfg.pegs && cfg.automaton_path)
        throw usage_error("give either --pegs or --automaton, not both");
    if (cfg.automaton_path) {
        std::ifstream f(*cfg.automaton_path);
        if (!f)
            throw std::runtime_error("cannot read " + *cfg.automaton_path);
        return parse_automaton(f);
    }
    if (cfg.pegs)
        return hanoi_automaton(*cfg.pegs);
    if (allow_inference)
        return hanoi_automaton(infer_pegs(cfg));
    throw usage_error("an automaton source is required: --pegs <m> or --automaton <file>");
}

std::size_t require_pegs(const RunConfig& cfg)
{
    if (cfg.automaton_path)
        throw usage_error("this command works on Hanoi automata only; use --pegs");
    if (!cfg.pegs)
        throw usage_error("--pegs is required");
    return *cfg.pegs;
}

template <typename F>
auto with_position(const std::string& what, F&& f)
{
    try {
        return f();
    } catch (const parse_error& e) {
        throw std::runtime_error(what + ": " + e.what());
    }
}

int cmd_gen(const RunConfig& cfg)
{
    write_output(cfg, emit_automaton(hanoi_automaton(require_pegs(cfg))));
    return 0;
}

int cmd_act(const RunConfig& cfg)
{
    auto a = load_automaton(cfg, true);
    auto w = with_position("--word", [&] { return parse_state_word(cfg.word, a); });
    auto v = with_position("--input", [&] { return parse_letter_word(cfg.input, a.alphabet_size()); });
    auto image = render_letter_word(apply(a, w, v), a.alphabet_size());
    if (cfg.csv)
        write_output(cfg, "input,output\n" + render_letter_word(v, a.alphabet_size()) + "," + image + "\n");
    else
        write_output(cfg, image + "\n");
    return 0;
}

int cmd_section(const RunConfig& cfg)
{
    auto a = load_automaton(cfg, true);
    auto w = with_position("--word", [&] { return parse_state_word(cfg.word, a); });
    auto v = with_position("--input", [&] { return parse_letter_word(cfg.input, a.alphabet_size()); });
    auto s = render_state_word(section_word(a, w, v), a);
    if (cfg.csv)
        write_output(cfg, "input,section\n" + render_letter_word(v, a.alphabet_size()) + ",\"" + s + "\"\n");
    else
        write_output(cfg, s + "\n");
    return 0;
}

int cmd_wp(const RunConfig& cfg)
{
    auto a = load_automaton(cfg, true);
    if (!a.invertible())
        throw std::runtime_error("the word problem needs an invertible automaton");
    auto w = with_position("--word", [&] { return parse_state_word(cfg.word, a); });
    auto closure = section_closure(a, w);
    bool identity = is_identity(a, w);
    const char* verdict = identity ? "identity" : "non-identity";
    if (cfg.csv)
        write_output(cfg, std::string("verdict,sections,depth\n") + verdict + "," + std::to_string(closure.count()) + "," +
                              std::to_string(closure.depth()) + "\n");
    else
        write_output(cfg, std::string(verdict) + "\nsections " + std::to_string(closure.count()) + "\ndepth " +
                              std::to_string(closure.depth()) + "\n");
    return identity ? 0 : 1;
}

int cmd_table(const RunConfig& cfg)
{
    auto a = load_automaton(cfg, false);
    if (cfg.max_n < 1)
        throw usage_error("--max-n must be at least 1");

    GrowthOptions opts;
    opts.use_symmetry = !cfg.no_symmetry;
    opts.include_trivial_state = cfg.include_trivial_state;
    opts.count_empty_section = !cfg.exclude_empty_section;
    opts.jobs = cfg.jobs;
    opts.long_run = cfg.long_run;

    GrowthReport progress;
    if (cfg.checkpoint && std::filesystem::exists(*cfg.checkpoint)) {
        opts.resume = parse_depth_table_csv(read_file(*cfg.checkpoint), a);
        if (opts.resume.size() > cfg.max_n)
            opts.resume.resize(cfg.max_n);
        std::cerr << "resuming after n=" << opts.resume.size() << " from " << *cfg.checkpoint << "\n";
    }
    progress.rows = opts.resume;
    opts.on_row = [&](const GrowthRow& row) {
        std::cerr << "n=" << row.n << " depth=" << row.depth << " theta=" << row.theta
                  << " words=" << row.words_examined << " (" << row.seconds << " s)\n";
        if (cfg.checkpoint) {
            progress.rows.push_back(row);
            std::ofstream f(*cfg.checkpoint, std::ios::binary | std::ios::trunc);
            f << depth_table_csv(progress, a, true);
        }
    };

    auto report = section_growth(a, cfg.max_n, opts);
    write_output(cfg, depth_table_csv(report, a, cfg.timing));
    if (!report.complete) {
        std::cerr << "error: stopped early: " << report.stop_reason << "\n";
        return 2;
    }
    return 0;
}

int cmd_claim(const RunConfig& cfg)
{
    const std::size_t m = require_pegs(cfg);
    auto ha = hanoi_automaton(m);
    ClaimReport all;
    all.pegs = m;
    for (std::size_t i = 0; i < cfg.lengths.size(); ++i) {
        const std::size_t n = cfg.lengths[i];
        auto r = verify_claim(m, n, cfg.samples, cfg.seed + i);
        auto mx = r.max_t_star(n);
        std::cerr << "n=" << n << " samples=" << cfg.samples << " max_t_star="
                  << (mx ? std::to_string(*mx) : std::string("inf")) << " bound=" << claim_bound(m, n)
                  << (r.all_pass() ? " pass" : " FAIL") << "\n";
        all.samples.insert(all.samples.end(), r.samples.begin(), r.samples.end());
    }
    write_output(cfg, claim_csv(all, ha));
    return all.all_pass() ? 0 : 1;
}

int cmd_solve(const RunConfig& cfg)
{
    const std::size_t m = require_pegs(cfg);
    auto ha = hanoi_automaton(m);
    StateWord w;
    Letter target;
    if (m == 3 || cfg.to) {
        target = cfg.to.value_or(3);
        w = solve_3peg(ha, cfg.disks, cfg.from, target);
    } else {
        if (cfg.from != 1)
            throw usage_error("--from applies to three-peg solutions only");
        target = static_cast<Letter>(m);
        w = frame_stewart(ha, cfg.disks);
    }
    const std::string word = render_state_word(w, ha);
    if (cfg.csv)
        write_output(cfg, "moves,word\n" + std::to_string(w.size()) + ",\"" + word + "\"\n");
    else
        write_output(cfg, word + "\n");
    std::cerr << w.size() << " moves\n";

    if (cfg.verify) {
        LetterWord start(cfg.disks, cfg.from), goal(cfg.disks, target);
        auto reached = apply(ha, w, start);
        if (reached != goal) {
            std::cerr << "verify: FAILED, reached " << render_letter_word(reached, m) << "\n";
            return 1;
        }
        std::cerr << "verify: ok, " << render_letter_word(start, m) << " -> " << render_letter_word(goal, m) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Mealy automata, sections and the Hanoi Towers automata"};
    app.require_subcommand(1);
    app.fallthrough();

    auto* pegs = app.add_option("--pegs", cfg.pegs, "Use the Hanoi automaton on m pegs")->check(CLI::Range(3, 255));
    auto* file = app.add_option("--automaton", cfg.automaton_path, "Read the automaton from a file");
    pegs->excludes(file);
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--out", cfg.out_path, "Write data output to this file");
    app.add_flag("--csv", cfg.csv, "Machine-readable CSV output");
    app.add_flag("--long-run", cfg.long_run, "Allow enumerations beyond the default word budget");
    app.add_flag("--no-symmetry", cfg.no_symmetry, "Do not reduce by letter relabelings");
    app.add_flag("--include-trivial-state", cfg.include_trivial_state, "Also enumerate words containing trivial states");

    auto* gen = app.add_subcommand("gen", "Emit the Hanoi automaton in text format");

    auto* act = app.add_subcommand("act", "Apply a state word to a letter word");
    act->add_option("--word", cfg.word, "State word, generators joined by '.'")->required();
    act->add_option("--input", cfg.input, "Letter word")->required();

    auto* section = app.add_subcommand("section", "Section of a state word at a letter word");
    section->add_option("--word", cfg.word, "State word")->required();
    section->add_option("--input", cfg.input, "Letter word")->required();

    auto* wp = app.add_subcommand("wp", "Decide whether a state word acts as the identity");
    wp->add_option("--word", cfg.word, "State word")->required();

    auto* table = app.add_subcommand("table", "Depth and section growth functions as CSV");
    table->add_option("--max-n", cfg.max_n, "Largest word length")->required();
    table->add_option("--checkpoint", cfg.checkpoint, "Resume from and save completed rows to this file");
    table->add_flag("--timing", cfg.timing, "Fill the seconds column (output then varies between runs)");
    table->add_flag("--exclude-empty-section", cfg.exclude_empty_section,
                    "Count only sections at non-empty inputs in theta");

    auto* claim = app.add_subcommand("claim", "Check that long-input sections fix a common letter");
    claim->add_option("--lengths", cfg.lengths, "Word lengths to sample")->delimiter(',');
    claim->add_option("--samples", cfg.samples, "Random words per length");

    auto* solve = app.add_subcommand("solve", "Tower of Hanoi solution as a state word");
    solve->add_option("--disks", cfg.disks, "Number of disks")->required();
    solve->add_option("--from", cfg.from, "Start peg (three-peg solutions)")->check(CLI::Range(1, 3));
    solve->add_option("--to", cfg.to, "Target peg (three-peg solutions)")->check(CLI::Range(1, 3));
    solve->add_flag("--verify", cfg.verify, "Replay the solution and check the final configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return cmd_gen(cfg);
        if (*act)
            return cmd_act(cfg);
        if (*section)
            return cmd_section(cfg);
        if (*wp)
            return cmd_wp(cfg);
        if (*table)
            return cmd_table(cfg);
        if (*claim)
            return cmd_claim(cfg);
        if (*solve)
            return cmd_solve(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
