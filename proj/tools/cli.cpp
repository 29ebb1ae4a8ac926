/*
 * Copyright 2026 The delaygame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "delaygame/io.hpp"
#include "delaygame/pipeline.hpp"
#include "delaygame/playengine.hpp"

namespace delaygame::cli {

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string strategy;
    std::string adversary;
    std::string kind = "block";
    std::optional<std::size_t> block_length;
    std::size_t lookahead = 1;
    std::size_t states = 1;
    std::size_t rounds = 10;
    std::size_t samples = 100;
    std::size_t max_rounds = 100'000;
    std::size_t budget = Budget{}.max_vertices;
    std::size_t max_candidates = Budget{}.max_candidates;
    std::uint64_t seed = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Budget budget_of(const Options &o)
{
    return Budget{.max_vertices = o.budget, .max_strategy_states = o.budget, .max_candidates = o.max_candidates};
}

char player_name(Player p) { return p == Player::O ? 'O' : 'I'; }

bool single_chars(const std::vector<std::string> &names)
{
    return std::all_of(names.begin(), names.end(), [](const std::string &s) { return s.size() == 1; });
}

std::string word_string(const std::vector<std::string> &names, std::span<const Symbol> word)
{
    const bool plain = single_chars(names);
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!plain && i > 0) out += ',';
        out += names.at(word[i]);
    }
    return word.empty() ? "ε" : out;
}

std::vector<Symbol> parse_word(const OmegaAutomaton &a, const std::string &text)
{
    std::vector<std::string> parts;
    if (text.find(',') != std::string::npos) {
        std::stringstream in(text);
        for (std::string p; std::getline(in, p, ',');) parts.push_back(p);
    } else {
        for (char c : text) parts.emplace_back(1, c);
    }
    std::vector<Symbol> word;
    for (const auto &p : parts) {
        const auto s = a.find_input(p);
        if (!s) throw UsageError("unknown input letter '" + p + "'");
        word.push_back(*s);
    }
    return word;
}

AdversaryChoice parse_adversary(const OmegaAutomaton &a, const std::string &text)
{
    if (text.rfind("random:", 0) == 0) {
        try {
            return RandomAdversary{std::stoull(text.substr(7))};
        } catch (const std::exception &) {
            throw UsageError("bad random seed in '" + text + "'");
        }
    }
    if (text.rfind("lasso:", 0) == 0) {
        const std::string rest = text.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw UsageError("expected lasso:<prefix>:<period>");
        ScriptedAdversary s{parse_word(a, rest.substr(0, colon)), parse_word(a, rest.substr(colon + 1))};
        if (s.period.empty()) throw UsageError("lasso period must be nonempty");
        return s;
    }
    throw UsageError("adversary must be lasso:<prefix>:<period> or random:<seed>");
}

std::string memory_name(const Monitor &m, Memory x) { return m.label(x); }

std::string outcome_line(const OmegaAutomaton &a, const std::vector<Letter> &outcome, bool inputs)
{
    std::vector<Symbol> w;
    for (const Letter &l : outcome) w.push_back(inputs ? l.in : l.out);
    return word_string(inputs ? a.input_names() : a.output_names(), w);
}

void write_text(const std::string &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

void print_header(std::ostream &out, const Analysis &an, const OmegaAutomaton &input)
{
    if (an.converted)
        out << "converted: Muller automaton with " << input.state_count() << " states to parity automaton with "
            << an.automaton.state_count() << " LAR states\n";
}

int cmd_solve(const Options &o, std::ostream &out)
{
    const OmegaAutomaton input = load_automaton(o.input);
    const Analysis an = analyze(input, budget_of(o));
    print_header(out, an, input);
    const auto &t = an.table;
    out << "winner: " << player_name(an.winner()) << ", index: " << t.index() << ", d_min: " << t.d_min()
        << ", d_theory: " << t.d_theory_string() << '\n';
    out << "infinite classes: " << t.infinite_classes().size() << '\n';
    if (an.reduced.degenerate) out << "note: no infinite class; Player O wins vacuously\n";
    out << "sufficient lookahead: " << 2 * t.d_min() << " (2*d_min)";
    if (const auto d = t.d_theory(); d && *d <= std::numeric_limits<std::uint64_t>::max() / 2)
        out << ", " << 2 * *d << " (2*d_theory)\n";
    else
        out << ", 2^" << t.d_theory_log2() + 1 << " (2*d_theory)\n";
    return an.winner() == Player::O ? ok : player_i_wins;
}

int cmd_synthesize(const Options &o, std::ostream &out, std::ostream &err)
{
    const OmegaAutomaton input = load_automaton(o.input);
    const Analysis an = analyze(input, budget_of(o));
    print_header(out, an, input);
    if (an.winner() == Player::I) {
        err << "Player I wins the reduced game; no strategy for Player O\n";
        return player_i_wins;
    }
    const std::size_t d = o.block_length.value_or(an.table.d_min());
    if (d < an.table.d_min())
        throw UsageError("block length " + std::to_string(d) + " is below d_min " + std::to_string(an.table.d_min()));
    const GSTransducer gs = winning_transducer(an);

    StrategyFile file{.kind = BundleKind::block_bundle,
                      .block_length = d,
                      .automaton = an.automaton,
                      .table = an.table,
                      .transducer = gs,
                      .delay = std::nullopt};
    if (o.kind == "gs") {
        file.kind = BundleKind::gs_transducer;
    } else if (o.kind == "delay") {
        auto block = std::make_shared<BlockStrategyBundle>(gs_to_block(gs, an.table, an.product, d));
        const DelayConversion conv = block_to_delay(block, budget_of(o));
        const DelayObliviousTransducer &t = materialized(conv);
        file = StrategyFile{.kind = BundleKind::delay_transducer,
                            .block_length = conv.lookahead,
                            .automaton = an.automaton,
                            .table = std::nullopt,
                            .transducer = std::nullopt,
                            .delay = t};
        out << "block states: " << conv.block_states << ", lookahead: " << conv.lookahead << '\n';
        out << "reachable states: " << *conv.reachable_states << ", canonical steady states: " << *conv.canonical_states
            << ", bound: " << *conv.canonical_bound << '\n';
    }
    write_text(o.output, write_bundle(file));
    out << "kind: " << bundle_kind_name(file.kind) << ", block length: " << d << '\n';
    out << "states: " << (file.delay ? *file.delay->state_count() : gs.state_count()) << '\n';
    out << "wrote " << o.output << '\n';
    return ok;
}

int cmd_convert(const Options &o, std::ostream &out)
{
    const OmegaAutomaton input = load_automaton(o.input);
    if (input.is_parity()) throw UsageError("input is already a parity automaton");
    const OmegaAutomaton parity = lar_convert(input);
    std::string text = "# LAR conversion: " + std::to_string(input.state_count()) + " Muller states, " +
                       std::to_string(parity.state_count()) + " parity states\n" + write_automaton(parity);
    if (o.output.empty()) {
        out << text;
    } else {
        write_text(o.output, text);
        out << "states: " << parity.state_count() << '\n' << "wrote " << o.output << '\n';
    }
    return ok;
}

int cmd_classes(const Options &o, std::ostream &out)
{
    const OmegaAutomaton input = load_automaton(o.input);
    const Analysis an = analyze(input, budget_of(o));
    print_header(out, an, input);
    const auto &t = an.table;
    const OmegaAutomaton &a = an.automaton;
    out << "index: " << t.index() << '\n'
        << "d_min: " << t.d_min() << '\n'
        << "d_theory: " << t.d_theory_string() << '\n';
    for (ClassId c = 0; c < t.index(); ++c) {
        const SummaryClass &sc = t.at(c);
        out << c << ' ' << word_string(a.input_names(), sc.representative) << ' '
            << (sc.infinite ? "infinite" : "finite");
        for (StateId q = 0; q < a.state_count(); ++q) {
            out << ' ' << a.state_name(q) << "->{";
            for (std::size_t i = 0; i < sc.summary[q].size(); ++i) {
                const ProductState &s = sc.summary[q][i];
                out << (i ? "," : "") << '(' << a.state_name(s.q) << ',' << memory_name(an.scheme.monitor, s.m) << ')';
            }
            out << '}';
        }
        out << '\n';
    }
    return ok;
}

int cmd_oracle(const Options &o, std::ostream &out)
{
    const OmegaAutomaton a = load_automaton(o.input);
    out << "winner: " << player_name(brute_force_winner(a, o.lookahead, budget_of(o))) << '\n';
    return ok;
}

int cmd_simulate(const Options &o, std::ostream &out)
{
    const StrategyFile file = load_bundle(o.strategy);
    const OmegaAutomaton &a = file.automaton;
    const AdversaryChoice adversary = parse_adversary(a, o.adversary);
    PlayRecord play;
    if (file.kind == BundleKind::delay_transducer) {
        play = simulate(DelayGameConfig{a, file.block_length}, *file.delay, adversary, o.rounds);
        out << "game: delay, lookahead " << file.block_length << '\n';
    } else {
        play = simulate(BlockGameConfig{a, file.block_length}, bundle_strategy(file), adversary, o.rounds);
        out << "game: block, block length " << file.block_length << '\n';
    }
    for (std::size_t i = 0; i < play.outputs.size(); ++i) {
        out << "round " << i << ": I";
        if (file.kind != BundleKind::delay_transducer && i == 0)
            out << ' ' << word_string(a.input_names(), play.inputs[0]);
        out << ' ' << word_string(a.input_names(), play.inputs[file.kind == BundleKind::delay_transducer ? i : i + 1])
            << " O " << word_string(a.output_names(), play.outputs[i]) << '\n';
    }
    out << "outcome in:  " << outcome_line(a, play.outcome, true) << '\n';
    out << "outcome out: " << outcome_line(a, play.outcome, false) << '\n';
    return ok;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const StrategyFile file = load_bundle(o.strategy);
    const OmegaAutomaton &a = file.automaton;
    const auto adversaries = random_lassos(a.input_count(), o.samples, o.seed);
    const Verification v = file.kind == BundleKind::delay_transducer
                               ? verify_strategy(DelayGameConfig{a, file.block_length}, *file.delay, adversaries,
                                                 o.max_rounds)
                               : verify_strategy(BlockGameConfig{a, file.block_length}, bundle_strategy(file),
                                                 adversaries, o.max_rounds);
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < v.verdicts.size(); ++i) {
        const AdversaryVerdict &r = v.verdicts[i];
        accepted += r.accepted;
        if (r.accepted) continue;
        const auto &adv = adversaries[i];
        out << "adversary " << i << " (" << word_string(a.input_names(), adv.prefix) << ':'
            << word_string(a.input_names(), adv.period) << "): "
            << (r.conclusive ? "rejected" : "inconclusive after " + std::to_string(r.rounds) + " rounds") << '\n';
        if (r.conclusive) {
            out << "  outcome in:  " << outcome_line(a, r.outcome.prefix, true) << " ("
                << outcome_line(a, r.outcome.period, true) << ")^w\n";
            out << "  outcome out: " << outcome_line(a, r.outcome.prefix, false) << " ("
                << outcome_line(a, r.outcome.period, false) << ")^w\n";
        }
    }
    out << "seed: " << o.seed << '\n' << "accepted: " << accepted << '/' << v.verdicts.size() << '\n';
    return v.all_accepted ? ok : player_i_wins;
}

int cmd_search(const Options &o, std::ostream &out)
{
    const OmegaAutomaton input = load_automaton(o.input);
    const OmegaAutomaton a = input.is_parity() ? input : lar_convert(input);
    const SearchResult r = exhaustive_transducer_search(a, o.lookahead, o.states, budget_of(o));
    out << "found: " << (r.found ? "yes" : "no") << ", candidates: " << r.candidates << '\n';
    if (r.witness) {
        out << "lambda:";
        for (Symbol b : r.witness->lambda()) out << ' ' << a.output_name(b);
        out << "\ndelta:";
        for (auto t : r.witness->delta()) out << ' ' << t;
        out << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Delay games with omega-regular winning conditions", "delaygame"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--budget", o.budget, "Vertex and strategy-state budget")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for random adversaries")->capture_default_str();

    auto input = [&](CLI::App *c) { c->add_option("file", o.input, "Automaton file")->required(); };
    auto *solve_cmd = app.add_subcommand("solve", "Winner of the reduced game, index and lookahead bounds");
    input(solve_cmd);
    auto *synth = app.add_subcommand("synthesize", "Write a winning strategy bundle");
    input(synth);
    synth->add_option("-o,--output", o.output, "Bundle path")->required();
    synth->add_option("--block-length", o.block_length, "Block length, d_min by default");
    synth->add_option("--kind", o.kind, "block, delay or gs")->check(CLI::IsMember({"block", "delay", "gs"}));
    auto *convert = app.add_subcommand("convert", "LAR conversion of a Muller automaton");
    input(convert);
    convert->add_option("-o,--output", o.output, "Output path, stdout by default");
    auto *classes = app.add_subcommand("classes", "Dump the transition-summary classes");
    input(classes);
    auto *oracle = app.add_subcommand("oracle", "Winner of the delay game by brute force");
    input(oracle);
    oracle->add_option("--lookahead", o.lookahead, "Constant lookahead d")->required()->check(CLI::PositiveNumber);
    auto *sim = app.add_subcommand("simulate", "Play a strategy against an adversary");
    sim->add_option("--strategy", o.strategy, "Bundle path")->required();
    sim->add_option("--adversary", o.adversary, "lasso:<prefix>:<period> or random:<seed>")->required();
    sim->add_option("--rounds", o.rounds, "Rounds to play")->capture_default_str();
    auto *verify = app.add_subcommand("verify", "Check a strategy against random lasso adversaries");
    verify->add_option("--strategy", o.strategy, "Bundle path")->required();
    verify->add_option("--samples", o.samples, "Number of adversaries")->capture_default_str();
    verify->add_option("--max-rounds", o.max_rounds, "Round cap per adversary")->capture_default_str();
    auto *search = app.add_subcommand("search", "Exhaustive search for small delay-oblivious transducers");
    input(search);
    search->add_option("--lookahead", o.lookahead, "Constant lookahead d")->required()->check(CLI::PositiveNumber);
    search->add_option("--states", o.states, "State bound")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-candidates", o.max_candidates, "Candidate budget")->capture_default_str();
    for (auto *c : app.get_subcommands({})) c->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << e.what() << '\n' << "run with --help for usage\n";
        return usage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(o, out);
        if (synth->parsed()) return cmd_synthesize(o, out, err);
        if (convert->parsed()) return cmd_convert(o, out);
        if (classes->parsed()) return cmd_classes(o, out);
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (sim->parsed()) return cmd_simulate(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (search->parsed()) return cmd_search(o, out);
    } catch (const FormatError &e) {
        err << "format error: " << e.what() << '\n';
        return format;
    } catch (const ResourceError &e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const PreconditionError &e) {
        err << "error: " << e.what() << '\n';
        return player_i_wins;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace delaygame::cli
