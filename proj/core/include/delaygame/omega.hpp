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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace delaygame {

using StateId = std::uint32_t;
/** Index into the input or the output alphabet of an automaton. */
using Symbol = std::uint32_t;
/** Sorted, duplicate-free set of states. */
using StateSet = std::vector<StateId>;

/** A letter of Σ_I × Σ_O. */
struct Letter {
    Symbol in = 0;
    Symbol out = 0;

    auto operator<=>(const Letter &) const = default;
};

/** A transition (q, a, q') of a deterministic automaton. */
struct Transition {
    StateId from = 0;
    Letter letter;
    StateId to = 0;

    auto operator<=>(const Transition &) const = default;
};

/** The ultimately periodic word prefix · period^ω. */
struct LassoWord {
    std::vector<Letter> prefix;
    std::vector<Letter> period;
};

enum class AcceptanceKind { parity, muller };

/**
 * Deterministic and complete ω-automaton over Σ_I × Σ_O with parity or Muller acceptance.
 *
 * Parity acceptance colors states; the color of a transition is the color of its source.
 * Muller acceptance lists the accepting sets of states visited infinitely often.
 * Objects are immutable once constructed.
 */
class OmegaAutomaton {
public:
    /** Builds a parity automaton. `delta` is indexed by `state * letter_count() + letter_index`. */
    static OmegaAutomaton parity(std::vector<std::string> inputs, std::vector<std::string> outputs,
                                 std::vector<std::string> states, StateId initial,
                                 std::vector<StateId> delta, std::vector<unsigned> colors);

    /** Builds a Muller automaton. Family members are normalised to sorted sets. */
    static OmegaAutomaton muller(std::vector<std::string> inputs, std::vector<std::string> outputs,
                                 std::vector<std::string> states, StateId initial,
                                 std::vector<StateId> delta, std::vector<StateSet> family);

    AcceptanceKind acceptance() const noexcept { return kind_; }
    bool is_parity() const noexcept { return kind_ == AcceptanceKind::parity; }

    std::size_t state_count() const noexcept { return states_.size(); }
    std::size_t input_count() const noexcept { return inputs_.size(); }
    std::size_t output_count() const noexcept { return outputs_.size(); }
    std::size_t letter_count() const noexcept { return inputs_.size() * outputs_.size(); }
    /** |δ| when δ is read as a relation. */
    std::size_t transition_count() const noexcept { return delta_.size(); }

    StateId initial() const noexcept { return initial_; }

    std::size_t letter_index(Letter a) const noexcept { return a.in * outputs_.size() + a.out; }
    Letter letter_at(std::size_t index) const noexcept
    {
        return {static_cast<Symbol>(index / outputs_.size()), static_cast<Symbol>(index % outputs_.size())};
    }

    /** δ(q, a); throws InputError on unknown state or letter. */
    StateId next(StateId q, Letter a) const;
    /** Unchecked δ lookup by letter index. */
    StateId next_unchecked(StateId q, std::size_t letter) const noexcept
    {
        return delta_[q * letter_count() + letter];
    }
    const std::vector<StateId> &delta() const noexcept { return delta_; }

    /** Ω(q); only meaningful for parity automata. */
    unsigned color(StateId q) const { return colors_.at(q); }
    const std::vector<unsigned> &colors() const noexcept { return colors_; }
    /** Sorted, duplicate-free list of the colors in use, Ω(Q). */
    std::vector<unsigned> color_set() const;

    const std::vector<StateSet> &family() const noexcept { return family_; }
    bool in_family(const StateSet &set) const;

    const std::string &state_name(StateId q) const { return states_.at(q); }
    const std::string &input_name(Symbol a) const { return inputs_.at(a); }
    const std::string &output_name(Symbol b) const { return outputs_.at(b); }
    const std::vector<std::string> &state_names() const noexcept { return states_; }
    const std::vector<std::string> &input_names() const noexcept { return inputs_; }
    const std::vector<std::string> &output_names() const noexcept { return outputs_; }

    std::optional<StateId> find_state(const std::string &name) const;
    std::optional<Symbol> find_input(const std::string &name) const;
    std::optional<Symbol> find_output(const std::string &name) const;

    bool operator==(const OmegaAutomaton &) const = default;

private:
    OmegaAutomaton() = default;
    void validate() const;

    AcceptanceKind kind_ = AcceptanceKind::parity;
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<std::string> states_;
    StateId initial_ = 0;
    std::vector<StateId> delta_;
    std::vector<unsigned> colors_;
    std::vector<StateSet> family_;
};

struct FiniteRun {
    std::vector<Transition> transitions;
    StateId end = 0;
};

/** The unique run from `q` processing `word`. */
FiniteRun run_finite(const OmegaAutomaton &automaton, StateId q, std::span<const Letter> word);

/** Whether the run from the initial state on prefix · period^ω is accepting. */
bool accepts_lasso(const OmegaAutomaton &automaton, const LassoWord &word);

/**
 * Latest-appearance-record conversion of a Muller automaton into a language-equivalent
 * parity automaton. Only reachable records are built; the result has at most |Q|·|Q|! states.
 */
OmegaAutomaton lar_convert(const OmegaAutomaton &muller);

} // namespace delaygame
