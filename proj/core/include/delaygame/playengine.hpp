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
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "delaygame/arena.hpp"
#include "delaygame/errors.hpp"
#include "delaygame/omega.hpp"
#include "delaygame/strategies.hpp"

namespace delaygame {

struct BlockGameConfig {
    OmegaAutomaton automaton;
    std::size_t block_length = 1;
};

/** Constant delay function with f(0) = lookahead and f(i) = 1 afterwards. */
struct DelayGameConfig {
    OmegaAutomaton automaton;
    std::size_t lookahead = 1;
};

/** Player I plays prefix · period^ω regardless of Player O's moves. */
struct ScriptedAdversary {
    std::vector<Symbol> prefix;
    std::vector<Symbol> period;
};

/** Uniform letters from a seeded mt19937_64. */
struct RandomAdversary {
    std::uint64_t seed = 0;
};

using AdversaryChoice = std::variant<ScriptedAdversary, RandomAdversary>;

/** Letter stream produced by an adversary. */
class AdversarySource {
public:
    AdversarySource(const AdversaryChoice &choice, std::size_t inputs);

    Symbol next();
    /** Normalized position in a scripted lasso; random sources have no phase. */
    std::optional<std::size_t> phase() const;

private:
    AdversaryChoice choice_;
    std::size_t inputs_;
    std::size_t position_ = 0;
    std::mt19937_64 rng_;
};

struct PlayRecord {
    std::vector<std::vector<Symbol>> inputs;  ///< x_i, or the blocks ā_i
    std::vector<std::vector<Symbol>> outputs; ///< y_i, or the blocks b̄_i
    std::vector<Letter> outcome;
};

/** Round 0: Player I picks two blocks. Round i: she picks one more, then O answers. */
PlayRecord simulate(const BlockGameConfig &config, const BlockStrategy &strategy, const AdversaryChoice &adversary,
                    std::size_t rounds);

/** Round 0: Player I picks f(0) letters. Round i: she picks one more, then O answers one letter. */
PlayRecord simulate(const DelayGameConfig &config, const LetterStrategy &strategy, const AdversaryChoice &adversary,
                    std::size_t rounds);

struct AdversaryVerdict {
    /** False when no repetition appeared within the round cap. */
    bool conclusive = false;
    bool accepted = false;
    LassoWord outcome;
    std::size_t rounds = 0;
};

struct Verification {
    bool all_accepted = true;
    std::vector<AdversaryVerdict> verdicts;
    /** Index of the first rejected or inconclusive adversary. */
    std::optional<std::size_t> counterexample;
};

/**
 * Plays against each scripted lasso until the configuration (adversary phase, strategy
 * state, automaton state, unanswered letters) repeats, and checks the outcome lasso.
 */
Verification verify_strategy(const BlockGameConfig &config, const BlockStrategy &strategy,
                             const std::vector<ScriptedAdversary> &adversaries, std::size_t max_rounds = 100'000);

Verification verify_strategy(const DelayGameConfig &config, const LetterStrategy &strategy,
                             const std::vector<ScriptedAdversary> &adversaries, std::size_t max_rounds = 100'000);

/** Lassos with prefix length ≤ max_prefix and period length in [1, max_period]. */
std::vector<ScriptedAdversary> random_lassos(std::size_t inputs, std::size_t count, std::uint64_t seed,
                                             std::size_t max_prefix = 4, std::size_t max_period = 4);

/** Winner of the delay game with constant lookahead d, from the delay-oblivious arena. */
Player brute_force_winner(const OmegaAutomaton &automaton, std::size_t lookahead, const Budget &budget = {});

struct SearchResult {
    bool found = false;
    std::uint64_t candidates = 0;
    std::optional<DelayObliviousTransducer> witness;
};

/**
 * Looks for a winning letter-wise transducer with at most `state_bound` states for the
 * delay game with constant lookahead d. Candidates start in state 0. Throws ResourceError
 * when the candidate count exceeds `budget.max_candidates`.
 */
SearchResult exhaustive_transducer_search(const OmegaAutomaton &automaton, std::size_t lookahead,
                                          std::size_t state_bound, const Budget &budget = {});

/** Whether the transducer wins the delay game against every Player I behaviour. */
bool transducer_wins(const OmegaAutomaton &automaton, const DelayObliviousTransducer &transducer);

} // namespace delaygame
