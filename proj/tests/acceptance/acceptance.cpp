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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "delaygame/io.hpp"
#include "delaygame/pipeline.hpp"
#include "delaygame/playengine.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace delaygame;
using delaygame::testing::corpus;
using delaygame::testing::corpus_path;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/** Collects failures of one criterion. */
class Check {
public:
    void expect(bool ok, const std::string &what)
    {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        failed_ |= !ok;
    }
    void note(const std::string &text) { notes_.push_back(text); }

    Outcome result() const
    {
        std::string detail;
        for (const auto &n : notes_) detail += (detail.empty() ? "" : "; ") + n;
        for (const auto &f : failures_) detail += (detail.empty() ? "failed: " : "; failed: ") + f;
        return {!failed_, detail};
    }

private:
    bool failed_ = false;
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
};

const std::vector<std::string> kCorpus{"copy.aut", "pred.aut", "mlr.aut", "universal.aut", "empty.aut"};

std::string cli_output(std::vector<std::string> args, int &code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str() + err.str();
}

Outcome oracle_agreement()
{
    Check c;
    std::mt19937_64 rng(2026);
    std::size_t agreed = 0, admitted = 0, skipped = 0, o_wins = 0;
    while (admitted < 200) {
        const auto a = delaygame::testing::random_parity(rng, 3, 3);
        const Analysis an = analyze(a);
        const std::size_t d = 2 * an.table.d_min();
        std::size_t size = 0;
        try {
            size = delay_arena_size(a, d);
        } catch (const ResourceError &) {
            size = SIZE_MAX;
        }
        if (size > 1'000'000) {
            ++skipped;
            continue;
        }
        ++admitted;
        const Player oracle = brute_force_winner(a, d);
        o_wins += oracle == Player::O;
        agreed += oracle == an.winner();
        c.expect(oracle == an.winner(), "instance " + std::to_string(admitted) + " disagrees");
    }
    c.note(std::to_string(agreed) + "/" + std::to_string(admitted) + " agree, " + std::to_string(o_wins) +
           " won by O, " + std::to_string(skipped) + " filtered by arena size");
    return c.result();
}

Outcome index_bound()
{
    Check c;
    for (const auto &name : kCorpus) {
        const Analysis an = analyze(corpus(name));
        c.expect(an.table.within_index_bound(), name + " exceeds 2^(|Q|^2*|M|)");
    }
    const Analysis copy = analyze(corpus("copy.aut"));
    c.expect(copy.table.index() == 2, "copy index is " + std::to_string(copy.table.index()));
    c.expect(copy.table.d_theory() == std::optional<std::uint64_t>{4096}, "copy d_theory is not 4096");
    c.note("copy index " + std::to_string(copy.table.index()) + ", d_theory " + copy.table.d_theory_string());
    return c.result();
}

Outcome copy_game()
{
    Check c;
    int code = 0;
    const std::string report = cli_output({"solve", corpus_path("copy.aut")}, code);
    c.expect(code == 0 && report.rfind("winner: O", 0) == 0, "solve does not report O");

    const Analysis an = analyze(corpus("copy.aut"));
    const auto bundle = synthesize_block(an);
    const auto v = verify_strategy(BlockGameConfig{an.automaton, bundle.block_length()}, bundle,
                                   random_lassos(2, 100, 303));
    c.expect(v.all_accepted, "bundle rejected on some lasso");

    const auto three = exhaustive_transducer_search(an.automaton, 2, 3);
    const auto four = exhaustive_transducer_search(an.automaton, 2, 4);
    c.expect(!three.found, "a 3-state transducer wins at f(0)=2");
    c.expect(four.found, "no 4-state transducer wins at f(0)=2");
    c.note("bundle " + std::to_string(*bundle.state_count()) + " states, 100 lassos; search: 3 states " +
           (three.found ? "found" : "none") + " in " + std::to_string(three.candidates) + ", 4 states " +
           (four.found ? "found" : "none") + " after " + std::to_string(four.candidates));
    return c.result();
}

Outcome prediction_game()
{
    Check c;
    const auto pred = corpus("pred.aut");
    const Player expected[] = {Player::I, Player::I, Player::O, Player::O};
    for (std::size_t d = 1; d <= 4; ++d)
        c.expect(brute_force_winner(pred, d) == expected[d - 1], "oracle winner wrong at d=" + std::to_string(d));
    const Analysis an = analyze(pred);
    c.expect(an.winner() == Player::O, "reduction winner is I");
    const auto bundle = synthesize_block(an);
    const auto v = verify_strategy(BlockGameConfig{an.automaton, bundle.block_length()}, bundle,
                                   random_lassos(2, 100, 404));
    c.expect(v.all_accepted, "block strategy rejected on some lasso");
    c.note("d_min " + std::to_string(an.table.d_min()) + ", bundle " + std::to_string(*bundle.state_count()) +
           " states, 100 lassos");
    return c.result();
}

Outcome remark_characterization()
{
    Check c;
    std::mt19937_64 rng(505);
    std::size_t checks = 0;
    for (int i = 0; i < 50; ++i) {
        const auto a = delaygame::testing::random_parity(rng, 3, 3);
        const auto p = product_with_monitor(a, parity_scheme(a).monitor);
        for (std::size_t len = 1; len <= 4; ++len)
            for (const auto &w : delaygame::testing::all_words(2, len))
                for (StateId q = 0; q < a.state_count(); ++q) {
                    ++checks;
                    c.expect(remark_check(p, q, w, 4), "automaton " + std::to_string(i));
                }
    }
    c.note(std::to_string(checks) + " (automaton, state, word) checks");
    return c.result();
}

/** Transfer checks for one winning block strategy. */
void transfer(Check &c, const std::string &label, const OmegaAutomaton &a, std::shared_ptr<const BlockStrategy> block)
{
    const std::size_t d = block->block_length();
    const DelayConversion conv = block_to_delay(block);
    const DelayGameConfig game{a, 2 * d};
    const auto lassos = random_lassos(a.input_count(), 50, 606 + d);
    const bool won = conv.transducer ? verify_strategy(game, *conv.transducer, lassos).all_accepted
                                     : verify_strategy(game, *conv.executor, lassos).all_accepted;
    c.expect(won, label + ": delay strategy rejected");

    std::string size;
    if (conv.canonical_states) {
        c.expect(conv.within_bound(), label + ": canonical states exceed n*|S_I|^(2d)");
        size = std::to_string(*conv.canonical_states) + "<=" + std::to_string(*conv.canonical_bound);
    } else {
        size = "not materialized, bound " +
               (conv.canonical_bound ? std::to_string(*conv.canonical_bound) : std::string("over 64 bits"));
    }

    const BlockTransducer back = delay_to_block(conv.executor);
    bool equal = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const AdversaryChoice adv = RandomAdversary{seed};
        const auto reference = simulate(BlockGameConfig{a, d}, *block, adv, 20).outcome;
        equal &= reference == simulate(BlockGameConfig{a, 2 * d}, back, adv, 10).outcome;
        equal &= reference == simulate(game, *conv.executor, adv, 20 * d).outcome;
    }
    c.expect(equal, label + ": round trip differs");
    c.note(label + " d=" + std::to_string(d) + " " + size);
}

Outcome strategy_transfer()
{
    Check c;
    for (const auto &name : kCorpus) {
        const Analysis an = analyze(corpus(name));
        if (an.winner() != Player::O) continue;
        transfer(c, name, an.automaton, std::make_shared<BlockStrategyBundle>(synthesize_block(an)));
    }
    transfer(c, "copy-1-state", corpus("copy.aut"), std::make_shared<delaygame::testing::CopyBlockStrategy>(2));
    transfer(c, "pred-6-state", corpus("pred.aut"),
             std::make_shared<BlockTransducer>(delay_to_block(
                 std::make_shared<DelayObliviousTransducer>(delaygame::testing::prediction_transducer()))));
    return c.result();
}

Outcome lar_correctness()
{
    Check c;
    std::mt19937_64 rng(707);
    std::size_t largest = 0;
    for (int i = 0; i < 20; ++i) {
        const auto m = delaygame::testing::random_muller(rng, 3);
        const auto p = lar_convert(m);
        largest = std::max(largest, p.state_count());
        for (int k = 0; k < 1000; ++k) {
            const auto w = delaygame::testing::random_lasso(m, rng);
            c.expect(accepts_lasso(m, w) == accepts_lasso(p, w), "automaton " + std::to_string(i));
        }
    }
    c.note("20 automata x 1000 lassos, largest LAR " + std::to_string(largest) + " states");
    return c.result();
}

Outcome solver_soundness()
{
    Check c;
    std::size_t arenas = 0;
    auto check = [&](const std::string &label, const ParityGameArena &arena) {
        if (arena.vertex_count() > 10'000) return;
        ++arenas;
        const SolveResult r = solve(arena);
        const std::string problem = delaygame::testing::check_solution(arena, r);
        c.expect(problem.empty(), label + ": " + problem);
    };
    for (const auto &name : kCorpus) {
        const auto a = corpus(name);
        const Analysis an = analyze(a);
        check(name + " reduced", an.reduced.arena);
        for (std::size_t d = 1; d <= 12; ++d) {
            if (delay_arena_size(an.automaton, d) > 10'000) break;
            check(name + " d=" + std::to_string(d), build_delay_oblivious_arena(an.automaton, d).arena);
        }
    }
    c.note(std::to_string(arenas) + " corpus arenas");
    return c.result();
}

Outcome size_comparison()
{
    Check c;
    const Analysis an = analyze(corpus("copy.aut"));
    auto bundle = std::make_shared<BlockStrategyBundle>(synthesize_block(an, 4));
    const DelayConversion conv = block_to_delay(bundle);
    c.expect(conv.transducer.has_value(), "delay-oblivious transducer not materialized");
    if (conv.transducer) {
        const std::size_t aware = *bundle->state_count();
        const std::size_t oblivious = *conv.reachable_states;
        c.expect(aware < oblivious, "delay-aware bundle is not smaller");
        c.note("delay-aware " + std::to_string(aware) + " states vs delay-oblivious " + std::to_string(oblivious) +
               " reachable (" + std::to_string(*conv.transducer->state_count()) + " after merging)");
    }
    return c.result();
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"criterion 1 oracle agreement", oracle_agreement},
        {"criterion 2 index bound", index_bound},
        {"criterion 3 copy game", copy_game},
        {"criterion 4 prediction game", prediction_game},
        {"criterion 5 summary characterization", remark_characterization},
        {"criterion 6 strategy transfer", strategy_transfer},
        {"criterion 7 LAR correctness", lar_correctness},
        {"criterion 8 solver soundness", solver_soundness},
        {"size comparison delay-aware vs delay-oblivious", size_comparison},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !out.pass;
        std::printf("%s %s (%.1fs): %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), secs, out.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
