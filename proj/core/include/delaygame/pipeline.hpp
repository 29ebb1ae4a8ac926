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

#pragma once

#include <optional>

#include "delaygame/arena.hpp"
#include "delaygame/errors.hpp"
#include "delaygame/gamesolve.hpp"
#include "delaygame/monitor.hpp"
#include "delaygame/omega.hpp"
#include "delaygame/reduction.hpp"
#include "delaygame/strategies.hpp"

namespace delaygame {

/** Everything the reduction computes for one automaton. */
struct Analysis {
    /** The input, or its LAR conversion when the input is a Muller automaton. */
    OmegaAutomaton automaton;
    bool converted = false;
    AggregationScheme scheme;
    ProductAutomaton product;
    ClassTable table;
    ReducedArena reduced;
    SolveResult result;

    Player winner() const { return result.winner_at(reduced.arena.initial()); }
};

/** Throws ResourceError when the reduced arena would exceed `budget.max_vertices`. */
Analysis analyze(const OmegaAutomaton &automaton, const Budget &budget = {});

/** Winning GS transducer of the reduced game; throws PreconditionError when Player I wins. */
GSTransducer winning_transducer(const Analysis &analysis);

/** Block strategy with the given block length, d_min by default. */
BlockStrategyBundle synthesize_block(const Analysis &analysis, std::optional<std::size_t> block_length = {});

} // namespace delaygame
