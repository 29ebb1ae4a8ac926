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

#include <cstddef>
#include <optional>
#include <string>

#include "delaygame/gamesolve.hpp"
#include "delaygame/omega.hpp"
#include "delaygame/reduction.hpp"
#include "delaygame/strategies.hpp"

namespace delaygame {

/**
 * Reads the line-based automaton format:
 *
 *     automaton parity            # or: automaton muller
 *     input 0 1
 *     output 0 1
 *     states s r
 *     initial s
 *     color s 0                   # parity: one per state
 *     accset s r                  # muller: one per family member
 *     trans s 0/1 r               # one per (state, input, output)
 *
 * Throws FormatError with the offending line number.
 */
OmegaAutomaton read_automaton(const std::string &text);
OmegaAutomaton load_automaton(const std::string &path);
std::string write_automaton(const OmegaAutomaton &automaton);

enum class BundleKind { block_bundle, delay_transducer, gs_transducer };

std::string bundle_kind_name(BundleKind kind);

/** Contents of a strategy bundle file. */
struct StrategyFile {
    BundleKind kind = BundleKind::block_bundle;
    /** Block length of a block bundle, lookahead f(0) of a delay transducer. */
    std::size_t block_length = 1;
    OmegaAutomaton automaton;
    std::optional<ClassTable> table;
    std::optional<GSTransducer> transducer;
    std::optional<DelayObliviousTransducer> delay;
};

std::string write_bundle(const StrategyFile &file);
/** Throws FormatError on malformed JSON or inconsistent tables. */
StrategyFile read_bundle(const std::string &text);
StrategyFile load_bundle(const std::string &path);

/** Block strategy of a block or GS bundle, with the parity monitor rebuilt from the automaton. */
BlockStrategyBundle bundle_strategy(const StrategyFile &file);

} // namespace delaygame
