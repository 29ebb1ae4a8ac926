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

#include "delaygame/pipeline.hpp"

#include <string>
#include <utility>

namespace delaygame {

Analysis analyze(const OmegaAutomaton &input, const Budget &budget)
{
    const bool converted = !input.is_parity();
    OmegaAutomaton automaton = converted ? lar_convert(input) : input;
    AggregationScheme scheme = parity_scheme(automaton);
    ProductAutomaton product = product_with_monitor(automaton, scheme.monitor);
    ClassTable table = build_class_table(product);

    const std::size_t r = table.infinite_classes().size();
    std::size_t vertices = 0;
    if (__builtin_mul_overflow(automaton.state_count() * scheme.acceptance.state_count(), r * (r + 1), &vertices) ||
        vertices + 1 > budget.max_vertices)
        throw ResourceError("reduced arena exceeds the vertex budget of " + std::to_string(budget.max_vertices));

    ReducedArena reduced = build_reduced_arena(product, scheme, table);
    SolveResult result = solve(reduced.arena);
    return Analysis{std::move(automaton), converted, std::move(scheme), std::move(product),
                    std::move(table),     std::move(reduced), std::move(result)};
}

GSTransducer winning_transducer(const Analysis &analysis)
{
    return extract_gs_transducer(analysis.reduced, analysis.result);
}

BlockStrategyBundle synthesize_block(const Analysis &analysis, std::optional<std::size_t> block_length)
{
    return gs_to_block(winning_transducer(analysis), analysis.table, analysis.product,
                       block_length.value_or(analysis.table.d_min()));
}

} // namespace delaygame
