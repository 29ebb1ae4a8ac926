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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "delaygame/io.hpp"
#include "delaygame/pipeline.hpp"

using namespace delaygame;

namespace {

OmegaAutomaton corpus(const std::string &name)
{
    return load_automaton(std::string(DELAYGAME_CORPUS_DIR) + "/" + name);
}

const char *kNames[] = {"copy.aut", "pred.aut", "mlr.aut"};

void BM_ClassTable(benchmark::State &state)
{
    const OmegaAutomaton a = corpus(kNames[state.range(0)]);
    const AggregationScheme scheme = parity_scheme(a);
    const ProductAutomaton product = product_with_monitor(a, scheme.monitor);
    for (auto _ : state) benchmark::DoNotOptimize(build_class_table(product));
    state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_ClassTable)->DenseRange(0, 1);

void BM_Analyze(benchmark::State &state)
{
    const OmegaAutomaton a = corpus(kNames[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(a));
    state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Analyze)->DenseRange(0, 2);

void BM_SolveDelayArena(benchmark::State &state)
{
    const OmegaAutomaton a = corpus("copy.aut");
    const auto arena = build_delay_oblivious_arena(a, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve(arena.arena));
    state.counters["vertices"] = static_cast<double>(arena.arena.vertex_count());
}
BENCHMARK(BM_SolveDelayArena)->DenseRange(1, 10, 3)->Unit(benchmark::kMicrosecond);

void BM_WitnessBlock(benchmark::State &state)
{
    const OmegaAutomaton a = corpus("copy.aut");
    const ProductAutomaton product = product_with_monitor(a, parity_scheme(a).monitor);
    const auto d = static_cast<std::size_t>(state.range(0));
    const std::vector<Symbol> block(d, 0);
    ProductState target{a.initial(), kBottom};
    for (Symbol c : block) target = product.step(target, Letter{c, 1});
    for (auto _ : state) benchmark::DoNotOptimize(witness_block(product, a.initial(), block, target));
}
BENCHMARK(BM_WitnessBlock)->RangeMultiplier(2)->Range(2, 16);

} // namespace
