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
#include <set>

#include "delaygame/errors.hpp"
#include "delaygame/monitor.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace delaygame;
using delaygame::testing::corpus;

namespace {

constexpr StateId s = 0, r = 1;

Transition tr(StateId from, Symbol a, Symbol b, StateId to) { return {from, {a, b}, to}; }

} // namespace

TEST_CASE("parity scheme of the copy automaton")
{
    const auto copy = corpus("copy.aut");
    const auto scheme = parity_scheme(copy);
    CHECK(scheme.monitor.size() == 2);
    CHECK(scheme.monitor.label(0) == "0");
    CHECK(scheme.monitor.label(1) == "1");
    CHECK(scheme.strength == AggregationStrength::strong);
    CHECK(scheme.monitor.update(0, tr(r, 0, 0, r)) == 1);
    CHECK(scheme.monitor.update(kBottom, tr(s, 0, 0, s)) == 0);
    CHECK(scheme.monitor.update(1, tr(s, 1, 1, s)) == 1);
    CHECK(scheme.acceptance.state_count() == 1);
    CHECK(scheme.acceptance.accepts_lasso({{}, {0}}));
    CHECK_FALSE(scheme.acceptance.accepts_lasso({{}, {1}}));
    CHECK(scheme.acceptance.accepts_lasso({{1, 1}, {0, 0}}));
    CHECK_THROWS_AS(scheme.monitor.update(5, tr(s, 0, 0, s)), InputError);
    CHECK_THROWS_AS(parity_scheme(corpus("mlr.aut")), InputError);
}

TEST_CASE("the update never produces the empty element")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        const auto a = delaygame::testing::random_parity(rng, 3, 3);
        const auto m = parity_scheme(a).monitor;
        for (Memory x = 0; x <= m.size(); ++x)
            for (StateId q = 0; q < a.state_count(); ++q)
                for (std::size_t l = 0; l < a.letter_count(); ++l) {
                    const Memory y = m.update(x == m.size() ? kBottom : x, q, l);
                    CHECK(y != kBottom);
                    CHECK(y < m.size());
                }
    }
}

TEST_CASE("Muller monitor collects source states")
{
    const auto mlr = corpus("mlr.aut");
    const auto m = muller_monitor(mlr);
    const StateId a = 0, b = 1;
    CHECK(m.size() == 3);
    CHECK(m.label(m.fold({tr(a, 0, 1, b), tr(b, 0, 0, a)})) == "{a,b}");
    CHECK(m.label(m.fold({tr(a, 0, 0, a)})) == "{a}");
    CHECK_THROWS_AS(muller_monitor(corpus("copy.aut")), InputError);
}

TEST_CASE("Muller monitor agrees with the direct source set on random pieces")
{
    const auto mlr = corpus("mlr.aut");
    const auto m = muller_monitor(mlr);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
        std::vector<Transition> piece;
        std::set<std::string> sources;
        StateId q = static_cast<StateId>(rng() % 2);
        const std::size_t len = 1 + rng() % 6;
        for (std::size_t j = 0; j < len; ++j) {
            const Letter l{static_cast<Symbol>(rng() % 2), static_cast<Symbol>(rng() % 2)};
            const StateId next = mlr.next(q, l);
            piece.push_back({q, l, next});
            sources.insert(mlr.state_name(q));
            q = next;
        }
        std::string expected = "{";
        for (const auto &n : sources) expected += (expected.size() > 1 ? "," : "") + n;
        CHECK(m.label(m.fold(piece)) == expected + "}");
    }
}

TEST_CASE("product steps")
{
    const auto copy = corpus("copy.aut");
    const auto product = product_with_monitor(copy, parity_scheme(copy).monitor);
    CHECK(product.initial() == ProductState{s, kBottom});
    CHECK(product.step(ProductState{s, kBottom}, Letter{0, 0}) == ProductState{s, 0});
    CHECK(product.step(ProductState{s, kBottom}, Letter{0, 1}) == ProductState{r, 0});
    CHECK(product.step(ProductState{r, 0}, Letter{0, 0}) == ProductState{r, 1});
    CHECK_THROWS_AS(product.step(ProductState{r, 7}, Letter{0, 0}), InputError);
    CHECK_THROWS_AS(product_with_monitor(corpus("pred.aut"), parity_scheme(copy).monitor), InputError);
}

TEST_CASE("aggregate folds every piece separately")
{
    const auto copy = corpus("copy.aut");
    const auto m = parity_scheme(copy).monitor;
    const std::vector<Transition> run{tr(s, 0, 0, s), tr(s, 1, 1, s)};
    CHECK(aggregate(m, {run}) == std::vector<Memory>{0});
    CHECK(aggregate(m, {{run[0]}, {run[1]}}) == std::vector<Memory>{0, 0});
    CHECK(aggregate(m, {{tr(s, 0, 1, r), tr(r, 0, 0, r)}}) == std::vector<Memory>{1});
    CHECK_THROWS_AS(aggregate(m, {{}}), InputError);
    CHECK_THROWS_AS(aggregate(m, {{tr(s, 0, 1, r)}, {tr(s, 0, 0, s)}}), InputError);
}

TEST_CASE("aggregate of a single piece is the left fold of the update")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto a = delaygame::testing::random_parity(rng, 3, 3);
        const auto m = parity_scheme(a).monitor;
        std::vector<Transition> piece;
        StateId q = a.initial();
        for (std::size_t j = 0, len = 1 + rng() % 6; j < len; ++j) {
            const Letter l{static_cast<Symbol>(rng() % 2), static_cast<Symbol>(rng() % 2)};
            piece.push_back({q, l, a.next(q, l)});
            q = piece.back().to;
        }
        Memory folded = kBottom;
        for (const auto &t : piece) folded = m.update(folded, t);
        CHECK(aggregate(m, {piece}) == std::vector<Memory>{folded});
    }
}

TEST_CASE("runs with equal aggregate sequences have equal acceptance")
{
    // Lassos are cut into their prefix and one piece per period repetition; the
    // priority automaton must judge the aggregate sequence like the automaton judges the run.
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const auto a = delaygame::testing::random_parity(rng, 3, 3);
        const auto scheme = parity_scheme(a);
        const auto w = delaygame::testing::random_lasso(a, rng);
        std::vector<Letter> unrolled = w.prefix;
        for (std::size_t k = 0; k < a.state_count(); ++k) unrolled.insert(unrolled.end(), w.period.begin(), w.period.end());
        const auto head = run_finite(a, a.initial(), unrolled);
        std::vector<Letter> cycle;
        StateId q = head.end;
        std::vector<StateId> boundary{q};
        std::size_t loop = 0;
        for (;;) {
            q = run_finite(a, q, w.period).end;
            auto it = std::find(boundary.begin(), boundary.end(), q);
            if (it != boundary.end()) {
                loop = static_cast<std::size_t>(it - boundary.begin());
                break;
            }
            boundary.push_back(q);
        }
        std::vector<std::vector<Transition>> pieces{head.transitions};
        if (pieces.front().empty()) pieces.clear();
        StateId cur = head.end;
        for (std::size_t k = 0; k < boundary.size(); ++k) {
            auto run = run_finite(a, cur, w.period);
            pieces.push_back(run.transitions);
            cur = run.end;
        }
        const auto seq = aggregate(scheme.monitor, pieces);
        const std::size_t offset = seq.size() - boundary.size();
        MemoryLasso ml{{seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(offset + loop)},
                       {seq.begin() + static_cast<std::ptrdiff_t>(offset + loop), seq.end()}};
        CHECK(scheme.acceptance.accepts_lasso(ml) == accepts_lasso(a, w));
    }
}
