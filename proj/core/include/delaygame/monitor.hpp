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

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "delaygame/omega.hpp"

namespace delaygame {

/** Index of a memory element of a monitor. */
using Memory = std::uint32_t;
/** The empty memory element ⊥; never produced by an update. */
inline constexpr Memory kBottom = std::numeric_limits<Memory>::max();

/**
 * Monitor (M, ⊥, upd) for an automaton: folds the transitions of a run piece into one
 * memory element. The update is stored as a table over M_⊥ × δ.
 */
class Monitor {
public:
    /**
     * `table` is indexed by `row * transitions + q * letters + letter`, where row is the memory
     * index or |M| for ⊥ and transitions = states * letters.
     */
    Monitor(std::size_t states, std::size_t inputs, std::size_t outputs, std::vector<std::string> labels,
            std::vector<Memory> table);

    /** |M|, not counting ⊥. */
    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t state_count() const noexcept { return states_; }
    std::size_t input_count() const noexcept { return inputs_; }
    std::size_t output_count() const noexcept { return outputs_; }

    Memory update(Memory m, StateId from, std::size_t letter) const noexcept
    {
        const std::size_t row = m == kBottom ? size() : m;
        return table_[row * states_ * inputs_ * outputs_ + from * inputs_ * outputs_ + letter];
    }
    /** upd(m, t); throws InputError when m or t lies outside the monitor's domain. */
    Memory update(Memory m, const Transition &t) const;

    /** s_M(π) for a nonempty piece. */
    Memory fold(const std::vector<Transition> &piece) const;

    const std::string &label(Memory m) const;

    bool operator==(const Monitor &) const = default;

private:
    std::size_t states_;
    std::size_t inputs_;
    std::size_t outputs_;
    std::vector<std::string> labels_;
    std::vector<Memory> table_;
};

/** An ultimately periodic sequence of memory elements. */
struct MemoryLasso {
    std::vector<Memory> prefix;
    std::vector<Memory> period;
};

/**
 * Deterministic complete automaton over the memory alphabet M with a priority on every
 * transition; a sequence is accepted iff the limsup of the priorities along its run is even.
 */
class PriorityAutomaton {
public:
    PriorityAutomaton(std::size_t states, std::size_t alphabet, std::uint32_t initial,
                      std::vector<std::uint32_t> next, std::vector<unsigned> priority);

    std::size_t state_count() const noexcept { return states_; }
    std::size_t alphabet_size() const noexcept { return alphabet_; }
    std::uint32_t initial() const noexcept { return initial_; }
    std::uint32_t next(std::uint32_t p, Memory m) const { return next_.at(p * alphabet_ + m); }
    unsigned priority(std::uint32_t p, Memory m) const { return priority_.at(p * alphabet_ + m); }

    bool accepts_lasso(const MemoryLasso &word) const;

    bool operator==(const PriorityAutomaton &) const = default;

private:
    std::size_t states_;
    std::size_t alphabet_;
    std::uint32_t initial_;
    std::vector<std::uint32_t> next_;
    std::vector<unsigned> priority_;
};

enum class AggregationStrength { strong, weak };

/** A monitor together with a priority automaton recognising s_M(Acc). */
struct AggregationScheme {
    Monitor monitor;
    PriorityAutomaton acceptance;
    AggregationStrength strength = AggregationStrength::strong;
};

/** Max-color monitor for a parity automaton; memory index i stands for the i-th smallest color. */
AggregationScheme parity_scheme(const OmegaAutomaton &automaton);

/** Monitor collecting the source states of a piece; memory m stands for the subset with bitmask m+1. */
Monitor muller_monitor(const OmegaAutomaton &automaton);

/** A state (q, m) of A × M with m ∈ M_⊥. */
struct ProductState {
    StateId q = 0;
    Memory m = kBottom;

    auto operator<=>(const ProductState &) const = default;
};

/** The product A × M; it carries no acceptance condition. */
class ProductAutomaton {
public:
    ProductAutomaton(OmegaAutomaton automaton, Monitor monitor);

    const OmegaAutomaton &automaton() const noexcept { return automaton_; }
    const Monitor &monitor() const noexcept { return monitor_; }

    ProductState initial() const noexcept { return {automaton_.initial(), kBottom}; }

    ProductState step(ProductState s, std::size_t letter) const noexcept
    {
        return {automaton_.next_unchecked(s.q, letter), monitor_.update(s.m, s.q, letter)};
    }
    /** δ'((q, m), a); throws InputError for states or letters outside the product. */
    ProductState step(ProductState s, Letter a) const;

private:
    OmegaAutomaton automaton_;
    Monitor monitor_;
};

ProductAutomaton product_with_monitor(const OmegaAutomaton &automaton, const Monitor &monitor);

/** s_M applied piecewise; the pieces must chain into one run. */
std::vector<Memory> aggregate(const Monitor &monitor, const std::vector<std::vector<Transition>> &pieces);

} // namespace delaygame
