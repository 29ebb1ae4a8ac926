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
#include <random>
#include <string>
#include <vector>

#include "delaygame/arena.hpp"
#include "delaygame/monitor.hpp"
#include "delaygame/omega.hpp"

namespace delaygame::testing {

OmegaAutomaton corpus(const std::string &name);
std::string corpus_path(const std::string &name);

/** Acceptance by explicit unfolding of |u| + 2·|Q|·|v| letters, without cycle detection. */
bool unfold_accepts(const OmegaAutomaton &a, const LassoWord &word);

LassoWord random_lasso(const OmegaAutomaton &a, std::mt19937_64 &rng, std::size_t max_prefix = 4,
                       std::size_t max_period = 4);

/** Complete deterministic parity automaton with 1..max_states states and colors in [0, colors). */
OmegaAutomaton random_parity(std::mt19937_64 &rng, std::size_t max_states, unsigned colors, std::size_t inputs = 2,
                             std::size_t outputs = 2);

/** Complete deterministic Muller automaton with a random family of nonempty subsets. */
OmegaAutomaton random_muller(std::mt19937_64 &rng, std::size_t max_states, std::size_t inputs = 2,
                             std::size_t outputs = 2);

/** Smallest output block by brute-force enumeration, or empty when none reaches `target`. */
std::vector<Symbol> enumerate_witness(const ProductAutomaton &product, StateId q, const std::vector<Symbol> &block,
                                      ProductState target);

/** Every input word of length `length` over `inputs` letters, in lexicographic order. */
std::vector<std::vector<Symbol>> all_words(std::size_t inputs, std::size_t length);

/**
 * Checks that the regions partition V and that both positional strategies are closed and
 * winning: in the strategy-restricted subgraph of each region every cycle has a maximal
 * priority of the region owner's parity. Returns an empty string on success.
 */
std::string check_solution(const ParityGameArena &arena, const SolveResult &result);

} // namespace delaygame::testing
