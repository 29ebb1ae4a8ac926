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

#include <cstdint>
#include <vector>

#include "delaygame/arena.hpp"
#include "delaygame/errors.hpp"
#include "delaygame/omega.hpp"
#include "delaygame/reduction.hpp"

namespace delaygame {

/**
 * Arena for the delay game with constant lookahead d over a parity automaton.
 *
 * Vertex 0 is the initial stub where Player I fills the queue with d letters. Player I
 * vertices are (transition, queue of d-1 letters), Player O vertices are (state, queue of
 * d letters). Edges leaving a transition vertex carry the color of the transition's source;
 * all other edges carry the neutral priority 0. With d = 1 this is the delay-free arena.
 */
struct DelayArena {
    ParityGameArena arena;
    std::size_t lookahead = 1;
    std::size_t queue_vertices = 0; ///< |Σ_I|^(d-1)

    /** Id of the Player I vertex ((q, a, q'), w) with transition index t = q·|Σ| + a. */
    VertexId transition_vertex(std::size_t t, std::size_t queue) const
    {
        return static_cast<VertexId>(1 + t * queue_vertices + queue);
    }
};

/** Vertex count 1 + |δ|·|Σ_I|^(d-1) + |Q|·|Σ_I|^d; throws ResourceError on overflow. */
std::size_t delay_arena_size(const OmegaAutomaton &automaton, std::size_t lookahead);

DelayArena build_gs_arena(const OmegaAutomaton &automaton);

/** Throws ResourceError when the vertex count exceeds `budget.max_vertices`. */
DelayArena build_delay_oblivious_arena(const OmegaAutomaton &automaton, std::size_t lookahead,
                                       const Budget &budget = {});

/**
 * Letter-wise transducer implementing τ(x) = λ(δ*(x)). For the reduced game the inputs are
 * positions in R and the outputs are product states (q, m).
 */
struct GSTransducer {
    std::size_t input_count = 0;
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> delta; ///< state * input_count + input
    std::vector<ProductState> lambda; ///< per state; the initial state's entry is never read

    std::size_t state_count() const noexcept { return lambda.size(); }
    std::uint32_t next(std::uint32_t state, std::uint32_t input) const
    {
        return delta.at(state * input_count + input);
    }
    ProductState output(std::uint32_t state) const { return lambda.at(state); }

    bool operator==(const GSTransducer &) const = default;
};

/**
 * Finite-state strategy for Player O in the reduced game, read off her positional strategy.
 * States are (reachable Player I vertex, last output) pairs. Throws PreconditionError if
 * the initial vertex is won by Player I.
 */
GSTransducer extract_gs_transducer(const ReducedArena &reduced, const SolveResult &result);

} // namespace delaygame
