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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delaygame/arena.hpp"
#include "delaygame/monitor.hpp"

namespace delaygame {

/** Sorted, duplicate-free subset of Q × M_⊥. */
using SummarySet = std::vector<ProductState>;
/** r_w: the reachable (state, memory) pairs per start state, indexed by state. */
using TransitionSummary = std::vector<SummarySet>;
using ClassId = std::uint32_t;

/** δ_P(S, a): successors of S over every completion (a, b), b ∈ Σ_O. */
SummarySet powerset_step(const ProductAutomaton &product, const SummarySet &set, Symbol input);

/** δ_P^+(S, w) for a nonempty input word. */
SummarySet powerset_run(const ProductAutomaton &product, SummarySet set, std::span<const Symbol> word);

/** r_w(q) = δ_P^+({(q, ⊥)}, w) for every q. */
TransitionSummary summary_of_word(const ProductAutomaton &product, std::span<const Symbol> word);

/**
 * Compares δ_P^+({(q, ⊥)}, w) with the set obtained by running the automaton on all
 * |Σ_O|^{|w|} completions of w and folding the monitor over each run.
 */
bool remark_check(const ProductAutomaton &product, StateId q, std::span<const Symbol> word, std::size_t bound);

struct SummaryClass {
    TransitionSummary summary;
    /** A shortest word with this summary. */
    std::vector<Symbol> representative;
    /** Class of representative·a, indexed by input letter. */
    std::vector<ClassId> successors;
    bool infinite = false;
};

/**
 * The ≡-classes of Σ_I^+ reachable from the single letters, with their letter-successor map
 * and the set R of infinite classes.
 */
class ClassTable {
public:
    /**
     * Takes the classes, their successor maps, and the class of each single letter; recomputes
     * the infinite flags and R. Throws InputError if the successor map is not closed.
     */
    ClassTable(std::vector<SummaryClass> classes, std::vector<ClassId> roots, std::size_t inputs,
               std::size_t states, std::size_t memory);

    const std::vector<SummaryClass> &classes() const noexcept { return classes_; }
    const SummaryClass &at(ClassId c) const { return classes_.at(c); }
    std::size_t index() const noexcept { return classes_.size(); }
    /** Every word of at least this length lies in an infinite class. */
    std::size_t d_min() const noexcept { return classes_.size() + 1; }
    /** log2 of 2^(|Q|²·|M_⊥|). */
    std::uint64_t d_theory_log2() const noexcept { return states_ * states_ * (memory_ + 1); }
    /** log2 of the index bound 2^(|Q|²·|M|). */
    std::uint64_t index_bound_log2() const noexcept { return states_ * states_ * memory_; }
    /** 2^(|Q|²·|M_⊥|) when it fits in 64 bits. */
    std::optional<std::uint64_t> d_theory() const noexcept;
    /** Decimal d_theory, or "2^k" when it overflows. */
    std::string d_theory_string() const;
    bool within_index_bound() const noexcept;

    ClassId root(Symbol a) const { return roots_.at(a); }
    const std::vector<ClassId> &roots() const noexcept { return roots_; }
    /** Class of a nonempty word, by walking the successor map. */
    ClassId class_of_word(std::span<const Symbol> word) const;
    std::optional<ClassId> find(const TransitionSummary &summary) const;

    /** R in ascending id order. */
    const std::vector<ClassId> &infinite_classes() const noexcept { return infinite_; }
    /** Position of `c` in R. */
    std::optional<std::uint32_t> infinite_index(ClassId c) const;

    std::size_t input_count() const noexcept { return inputs_; }
    std::size_t state_count() const noexcept { return states_; }
    std::size_t memory_size() const noexcept { return memory_; }

private:
    std::vector<SummaryClass> classes_;
    std::size_t inputs_;
    std::size_t states_;
    std::size_t memory_;
    std::vector<ClassId> roots_;
    std::vector<ClassId> infinite_;
    std::vector<std::int64_t> infinite_pos_;
    std::map<TransitionSummary, ClassId> lookup_;
};

/** Breadth-first closure from the length-1 summaries; infinite flags by cycle reachability. */
ClassTable build_class_table(const ProductAutomaton &product);

struct ReducedVertex {
    enum class Kind : std::uint8_t { pre, choose_class, choose_state };
    Kind kind = Kind::pre;
    StateId q = 0;
    std::uint32_t p = 0;       ///< state of the scheme's priority automaton
    std::uint32_t pending = 0; ///< index into R of the class O answers next
    std::uint32_t next = 0;    ///< index into R of the class I just picked (O vertices only)
};

/**
 * Arena for the delay-free game on R × Q × M. Player I vertices are (q, p, S) plus one
 * initial pre-vertex; Player O vertices are (q, p, S, S'), from which O chooses
 * (q', m') ∈ r_S(q).
 */
struct ReducedArena {
    ParityGameArena arena;
    std::vector<ReducedVertex> vertices;
    /** (q', m') chosen by each O edge; {q_I, ⊥} elsewhere. */
    std::vector<ProductState> edge_choice;
    /** R as class ids; vertex fields `pending`/`next` index this vector. */
    std::vector<ClassId> classes;
    /** R = ∅: Player I has no legal move and O wins vacuously. */
    bool degenerate = false;
};

ReducedArena build_reduced_arena(const ProductAutomaton &product, const AggregationScheme &scheme,
                                 const ClassTable &table);

} // namespace delaygame
