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

#include <algorithm>
#include <random>

#include "delaygame/errors.hpp"
#include "delaygame/pipeline.hpp"
#include "delaygame/playengine.hpp"
#include "delaygame/strategies.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace delaygame;
using delaygame::testing::all_words;
using delaygame::testing::corpus;

namespace {

constexpr StateId s = 0, r = 1;

ProductAutomaton product_of(const OmegaAutomaton &a) { return product_with_monitor(a, parity_scheme(a).monitor); }

} // namespace

TEST_CASE("witness blocks on the copy product")
{
    const auto p = product_of(corpus("copy.aut"));
    CHECK(witness_block(p, s, std::vector<Symbol>{0, 1}, {s, 0}) == std::vector<Symbol>{0, 1});
    CHECK(witness_block(p, s, std::vector<Symbol>{0, 0}, {r, 1}) == std::vector<Symbol>{1, 0});
    CHECK(witness_block(p, s, std::vector<Symbol>{0, 0}, {r, 0}) == std::vector<Symbol>{0, 1});
    CHECK(witness_block(p, s, std::vector<Symbol>{1}, {r, 0}) == std::vector<Symbol>{0});
    CHECK_THROWS_AS(witness_block(p, s, std::vector<Symbol>{0}, {r, 1}), PreconditionError);
    CHECK_THROWS_AS(witness_block(p, s, std::vector<Symbol>{}, {s, 0}), InputError);
}

TEST_CASE("witness blocks are sound and minimal")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const auto a = delaygame::testing::random_parity(rng, 3, 3);
        const auto p = product_of(a);
        for (std::size_t len = 1; len <= 4; ++len)
            for (const auto &w : all_words(2, len))
                for (StateId q = 0; q < a.state_count(); ++q)
                    for (const ProductState &target : powerset_run(p, {{q, kBottom}}, w)) {
                        const auto b = witness_block(p, q, w, target);
                        CHECK(b == delaygame::testing::enumerate_witness(p, q, w, target));
                        ProductState cur{q, kBottom};
                        for (std::size_t j = 0; j < w.size(); ++j) cur = p.step(cur, Letter{w[j], b[j]});
                        CHECK(cur == target);
                    }
    }
}

TEST_CASE("copy bundle copies")
{
    const Analysis an = analyze(corpus("copy.aut"));
    const auto gs = winning_transducer(an);
    const BlockStrategyBundle bundle = gs_to_block(gs, an.table, an.product, 3);
    CHECK(bundle.state_count() == gs.state_count());
    CHECK(bundle.block_length() == 3);
    const auto blocks = all_words(2, 3);
    StrategyState g = bundle.initial();
    for (const auto &x : blocks)
        for (const auto &y : blocks) CHECK(bundle.output(g, x, y) == x);
    g = bundle.next(g, blocks[5]);
    for (const auto &x : blocks) CHECK(bundle.output(g, x, blocks[2]) == x);
    CHECK_THROWS_AS(gs_to_block(gs, an.table, an.product, 2), InputError);
    CHECK_THROWS_AS(bundle.next(g, std::vector<Symbol>{0, 0}), InputError);
}

TEST_CASE("bundle witnesses reconstruct consistent commitments")
{
    const Analysis an = analyze(corpus("pred.aut"));
    const BlockStrategyBundle bundle = synthesize_block(an);
    const std::size_t d = bundle.block_length();
    std::mt19937_64 rng(22);
    for (int run = 0; run < 20; ++run) {
        std::vector<std::vector<Symbol>> blocks;
        for (int i = 0; i < 8; ++i) {
            std::vector<Symbol> b(d);
            for (auto &x : b) x = static_cast<Symbol>(rng() % 2);
            blocks.push_back(std::move(b));
        }
        StrategyState g = bundle.initial();
        ProductState prev{an.automaton.initial(), kBottom};
        for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
            const ProductState committed = bundle.commitment(bundle.next(g, blocks[i]), blocks[i + 1]);
            const auto image = summary_of_word(an.product, blocks[i])[prev.q];
            CHECK(std::find(image.begin(), image.end(), committed) != image.end());
            const auto out = bundle.output(g, blocks[i], blocks[i + 1]);
            ProductState cur{prev.q, kBottom};
            for (std::size_t j = 0; j < d; ++j) cur = an.product.step(cur, Letter{blocks[i][j], out[j]});
            CHECK(cur == committed);
            prev = committed;
            g = bundle.next(g, blocks[i]);
        }
    }
}

TEST_CASE("copy block strategy becomes a winning delay transducer")
{
    const auto copy = corpus("copy.aut");
    auto block = std::make_shared<delaygame::testing::CopyBlockStrategy>(2);
    const DelayConversion conv = block_to_delay(block);
    REQUIRE(conv.transducer);
    CHECK(conv.lookahead == 4);
    CHECK(conv.canonical_bound == std::optional<std::uint64_t>{16});
    CHECK(conv.total_bound == std::optional<std::uint64_t>{31});
    REQUIRE(conv.canonical_states);
    CHECK(*conv.canonical_states <= 16);
    CHECK(conv.within_bound());

    const auto &t = materialized(conv);
    const auto verdict = verify_strategy(DelayGameConfig{copy, 4}, t, random_lassos(2, 100, 3));
    CHECK(verdict.all_accepted);
    CHECK(verify_strategy(DelayGameConfig{copy, 4}, *conv.executor, random_lassos(2, 30, 4)).all_accepted);

    for (const auto &x : all_words(2, 4)) {
        StrategyState st = t.initial();
        for (Symbol c : x) st = t.next(st, c);
        const std::vector<Symbol> first(x.begin(), x.begin() + 2), second(x.begin() + 2, x.end());
        CHECK(t.output(st) == block->output(block->initial(), first, second).front());
    }
}

TEST_CASE("executor and materialized transducer agree")
{
    const Analysis an = analyze(corpus("copy.aut"));
    auto bundle = std::make_shared<BlockStrategyBundle>(synthesize_block(an));
    const DelayConversion conv = block_to_delay(bundle);
    REQUIRE(conv.transducer);
    std::mt19937_64 rng(24);
    for (int run = 0; run < 50; ++run) {
        StrategyState a = conv.transducer->initial(), b = conv.executor->initial();
        for (int i = 0; i < 40; ++i) {
            const auto c = static_cast<Symbol>(rng() % 2);
            a = conv.transducer->next(a, c);
            b = conv.executor->next(b, c);
            if (static_cast<std::size_t>(i + 1) >= conv.lookahead) CHECK(conv.transducer->output(a) == conv.executor->output(b));
        }
    }
}

TEST_CASE("conversion over budget keeps the executor")
{
    auto block = std::make_shared<delaygame::testing::CopyBlockStrategy>(6);
    const DelayConversion conv = block_to_delay(block, Budget{.max_strategy_states = 100});
    CHECK_FALSE(conv.transducer);
    CHECK(conv.executor);
    CHECK_THROWS_AS(materialized(conv), ResourceError);
    CHECK(conv.executor->lookahead() == 12);
}

TEST_CASE("delay_to_block keeps the states of the transducer")
{
    auto t = std::make_shared<DelayObliviousTransducer>(delaygame::testing::prediction_transducer());
    const BlockTransducer block = delay_to_block(t);
    CHECK(block.state_count() == t->state_count());
    CHECK(block.block_length() == 3);
    const auto pred = corpus("pred.aut");
    CHECK(verify_strategy(DelayGameConfig{pred, 3}, *t, random_lassos(2, 100, 5)).all_accepted);
    CHECK(verify_strategy(BlockGameConfig{pred, 3}, block, random_lassos(2, 100, 6)).all_accepted);
    CHECK_THROWS_AS(block.output(0, std::vector<Symbol>{0}, std::vector<Symbol>{0, 0, 0}), InputError);
}

TEST_CASE("delay_to_block after block_to_delay reproduces the outputs")
{
    const Analysis an = analyze(corpus("copy.aut"));
    std::vector<std::shared_ptr<const BlockStrategy>> sources{
        std::make_shared<delaygame::testing::CopyBlockStrategy>(2),
        std::make_shared<BlockStrategyBundle>(synthesize_block(an))};
    for (const auto &source : sources) {
        const DelayConversion conv = block_to_delay(source);
        const BlockTransducer back = delay_to_block(conv.executor);
        const std::size_t d = source->block_length();
        CHECK(back.block_length() == 2 * d);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const AdversaryChoice adv = RandomAdversary{seed};
            const auto original = simulate(BlockGameConfig{an.automaton, d}, *source, adv, 20);
            const auto round_trip = simulate(BlockGameConfig{an.automaton, 2 * d}, back, adv, 10);
            CHECK(original.outcome == round_trip.outcome);
        }
    }
}
