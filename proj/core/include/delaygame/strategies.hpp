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
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delaygame/errors.hpp"
#include "delaygame/gamesolve.hpp"
#include "delaygame/monitor.hpp"
#include "delaygame/omega.hpp"
#include "delaygame/reduction.hpp"

namespace delaygame {

using StrategyState = std::uint64_t;

/**
 * Letter-wise strategy for Player O in a delay game: after reading the input prefix x it
 * answers output(δ*(x)).
 */
class LetterStrategy {
public:
    virtual ~LetterStrategy() = default;

    virtual std::size_t input_count() const = 0;
    virtual std::size_t output_count() const = 0;
    /** Constant lookahead f(0) the strategy is meant for. */
    virtual std::size_t lookahead() const = 0;
    virtual StrategyState initial() const = 0;
    virtual StrategyState next(StrategyState state, Symbol input) const = 0;
    virtual Symbol output(StrategyState state) const = 0;
    /** Number of states when known up front. */
    virtual std::optional<std::size_t> state_count() const = 0;
};

/**
 * Strategy for Player O in a block game with block length d. In round i she answers
 * output(δ*(ā_0⋯ā_{i-1}), ā_i, ā_{i+1}).
 */
class BlockStrategy {
public:
    virtual ~BlockStrategy() = default;

    virtual std::size_t block_length() const = 0;
    virtual std::size_t input_count() const = 0;
    virtual std::size_t output_count() const = 0;
    virtual StrategyState initial() const = 0;
    virtual StrategyState next(StrategyState state, std::span<const Symbol> block) const = 0;
    virtual std::vector<Symbol> output(StrategyState state, std::span<const Symbol> block,
                                       std::span<const Symbol> lookahead) const = 0;
    virtual std::optional<std::size_t> state_count() const = 0;
};

/**
 * Lexicographically smallest output block b̄ such that the product run from (q, ⊥) on (ā, b̄)
 * ends in `target`. Throws PreconditionError if no such block exists.
 */
std::vector<Symbol> witness_block(const ProductAutomaton &product, StateId q, std::span<const Symbol> block,
                                  ProductState target);

/**
 * Block strategy read off a winning transducer of the reduced game. States are the
 * transducer's states; λ is evaluated on demand through witness_block.
 */
class BlockStrategyBundle final : public BlockStrategy {
public:
    BlockStrategyBundle(GSTransducer transducer, ClassTable table, ProductAutomaton product, std::size_t block_length);

    std::size_t block_length() const override { return block_length_; }
    std::size_t input_count() const override { return product_.automaton().input_count(); }
    std::size_t output_count() const override { return product_.automaton().output_count(); }
    StrategyState initial() const override { return transducer_.initial; }
    StrategyState next(StrategyState state, std::span<const Symbol> block) const override;
    std::vector<Symbol> output(StrategyState state, std::span<const Symbol> block,
                               std::span<const Symbol> lookahead) const override;
    std::optional<std::size_t> state_count() const override { return transducer_.state_count(); }

    /** Position in R of the class of a block; throws InputError when the class is finite. */
    std::uint32_t block_class(std::span<const Symbol> block) const;
    /** The (state, memory) pair the transducer commits to after reading `block` in `state`. */
    ProductState commitment(StrategyState state, std::span<const Symbol> block) const;

    const GSTransducer &transducer() const noexcept { return transducer_; }
    const ClassTable &table() const noexcept { return table_; }
    const ProductAutomaton &product() const noexcept { return product_; }

private:
    GSTransducer transducer_;
    ClassTable table_;
    ProductAutomaton product_;
    std::size_t block_length_;
};

/** Throws InputError if `block_length` is below d_min. */
BlockStrategyBundle gs_to_block(const GSTransducer &transducer, const ClassTable &table,
                                const ProductAutomaton &product, std::size_t block_length);

/** Materialized letter-wise transducer; λ of the initial state is never consulted. */
class DelayObliviousTransducer final : public LetterStrategy {
public:
    DelayObliviousTransducer(std::size_t inputs, std::size_t outputs, std::size_t lookahead, std::uint32_t initial,
                             std::vector<std::uint32_t> delta, std::vector<Symbol> lambda);

    std::size_t input_count() const override { return inputs_; }
    std::size_t output_count() const override { return outputs_; }
    std::size_t lookahead() const override { return lookahead_; }
    StrategyState initial() const override { return initial_; }
    StrategyState next(StrategyState state, Symbol input) const override
    {
        return delta_.at(state * inputs_ + input);
    }
    Symbol output(StrategyState state) const override { return lambda_.at(state); }
    std::optional<std::size_t> state_count() const override { return lambda_.size(); }

    const std::vector<std::uint32_t> &delta() const noexcept { return delta_; }
    const std::vector<Symbol> &lambda() const noexcept { return lambda_; }

    bool operator==(const DelayObliviousTransducer &other) const
    {
        return inputs_ == other.inputs_ && outputs_ == other.outputs_ && lookahead_ == other.lookahead_ &&
               initial_ == other.initial_ && delta_ == other.delta_ && lambda_ == other.lambda_;
    }

private:
    std::size_t inputs_;
    std::size_t outputs_;
    std::size_t lookahead_;
    std::uint32_t initial_;
    std::vector<std::uint32_t> delta_;
    std::vector<Symbol> lambda_;
};

/**
 * Letter-wise simulation of a block strategy at lookahead 2d, with states interned on
 * first use. Filling states hold fewer than 2d letters; steady states hold the block
 * strategy's state, the unanswered block, the letters of the block being read and the
 * rest of the current output block.
 */
class DelayExecutor final : public LetterStrategy {
public:
    explicit DelayExecutor(std::shared_ptr<const BlockStrategy> block);

    std::size_t input_count() const override { return block_->input_count(); }
    std::size_t output_count() const override { return block_->output_count(); }
    std::size_t lookahead() const override { return 2 * block_->block_length(); }
    StrategyState initial() const override { return 0; }
    StrategyState next(StrategyState state, Symbol input) const override;
    Symbol output(StrategyState state) const override;
    std::optional<std::size_t> state_count() const override { return std::nullopt; }

    bool steady(StrategyState state) const;
    std::size_t interned() const;

private:
    struct Key {
        bool steady = false;
        StrategyState block_state = 0;
        std::vector<Symbol> unanswered;
        std::vector<Symbol> reading; ///< filling buffer, or the partial next block
        std::vector<Symbol> pending; ///< rest of the output block

        auto operator<=>(const Key &) const = default;
    };

    StrategyState intern(Key key) const;
    Key key_of(StrategyState state) const;

    std::shared_ptr<const BlockStrategy> block_;
    mutable std::mutex mutex_;
    mutable std::map<Key, StrategyState> index_;
    mutable std::vector<Key> keys_;
};

/** Result of turning a block strategy into a delay-oblivious one for f(0) = 2d. */
struct DelayConversion {
    std::shared_ptr<const DelayExecutor> executor;
    /** Present when the reachable part fits the strategy budget. */
    std::optional<DelayObliviousTransducer> transducer;
    std::size_t lookahead = 0;
    std::size_t block_states = 0;
    /** Reachable states before merging, when explored. */
    std::optional<std::size_t> reachable_states;
    /** Steady states after merging behaviourally equal ones, when explored. */
    std::optional<std::size_t> canonical_states;
    /** n·|Σ_I|^(2d) and n·(|Σ_I|^(2d+1)-1)/(|Σ_I|-1), when they fit in 64 bits. */
    std::optional<std::uint64_t> canonical_bound;
    std::optional<std::uint64_t> total_bound;

    bool within_bound() const noexcept
    {
        return canonical_states && canonical_bound && *canonical_states <= *canonical_bound;
    }
};

/**
 * Delay-oblivious strategy for lookahead 2d. The transducer is materialized when
 * n·|Σ_I|^(2d) and the reachable states stay within `budget.max_strategy_states`; the
 * executor is always available.
 */
DelayConversion block_to_delay(std::shared_ptr<const BlockStrategy> block, const Budget &budget = {});

/** The materialized transducer; throws ResourceError when the conversion exceeded its budget. */
const DelayObliviousTransducer &materialized(const DelayConversion &conversion);

/** Block strategy with block length d = f(0) running a letter-wise strategy over its blocks. */
class BlockTransducer final : public BlockStrategy {
public:
    explicit BlockTransducer(std::shared_ptr<const LetterStrategy> letters);

    std::size_t block_length() const override { return letters_->lookahead(); }
    std::size_t input_count() const override { return letters_->input_count(); }
    std::size_t output_count() const override { return letters_->output_count(); }
    StrategyState initial() const override { return letters_->initial(); }
    StrategyState next(StrategyState state, std::span<const Symbol> block) const override;
    std::vector<Symbol> output(StrategyState state, std::span<const Symbol> block,
                               std::span<const Symbol> lookahead) const override;
    std::optional<std::size_t> state_count() const override { return letters_->state_count(); }

private:
    std::shared_ptr<const LetterStrategy> letters_;
};

BlockTransducer delay_to_block(std::shared_ptr<const LetterStrategy> letters);

} // namespace delaygame
