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

#include <memory>
#include <span>
#include <vector>

#include "delaygame/strategies.hpp"

namespace delaygame::testing {

/** One-state block strategy that answers every block with a copy of itself. */
class CopyBlockStrategy final : public BlockStrategy {
public:
    explicit CopyBlockStrategy(std::size_t d) : d_(d) {}

    std::size_t block_length() const override { return d_; }
    std::size_t input_count() const override { return 2; }
    std::size_t output_count() const override { return 2; }
    StrategyState initial() const override { return 0; }
    StrategyState next(StrategyState, std::span<const Symbol>) const override { return 0; }
    std::vector<Symbol> output(StrategyState, std::span<const Symbol> block, std::span<const Symbol>) const override
    {
        return {block.begin(), block.end()};
    }
    std::optional<std::size_t> state_count() const override { return 1; }

private:
    std::size_t d_;
};

/** Wraps a block strategy and flips the first output bit of every block. */
class FlippedBlockStrategy final : public BlockStrategy {
public:
    explicit FlippedBlockStrategy(const BlockStrategy &inner) : inner_(inner) {}

    std::size_t block_length() const override { return inner_.block_length(); }
    std::size_t input_count() const override { return inner_.input_count(); }
    std::size_t output_count() const override { return inner_.output_count(); }
    StrategyState initial() const override { return inner_.initial(); }
    StrategyState next(StrategyState s, std::span<const Symbol> block) const override { return inner_.next(s, block); }
    std::vector<Symbol> output(StrategyState s, std::span<const Symbol> block,
                               std::span<const Symbol> lookahead) const override
    {
        auto out = inner_.output(s, block, lookahead);
        out.front() = 1 - out.front();
        return out;
    }
    std::optional<std::size_t> state_count() const override { return inner_.state_count(); }

private:
    const BlockStrategy &inner_;
};

/**
 * Six-state delay transducer for the prediction game at lookahead 3: it waits for the
 * third input letter and repeats it as its first output.
 */
inline DelayObliviousTransducer prediction_transducer()
{
    // states: start, one, two, saw0, saw1, done
    return DelayObliviousTransducer(2, 2, 3, 0, {1, 1, 2, 2, 3, 4, 5, 5, 5, 5, 5, 5}, {0, 0, 0, 0, 1, 0});
}

/** Four-state transducer for the copy game at lookahead 2 remembering the last two letters. */
inline DelayObliviousTransducer copy_buffer_transducer()
{
    std::vector<std::uint32_t> delta;
    std::vector<Symbol> lambda;
    for (std::uint32_t s = 0; s < 4; ++s) {
        for (std::uint32_t a = 0; a < 2; ++a) delta.push_back((s * 2 + a) % 4);
        lambda.push_back(s >> 1);
    }
    return DelayObliviousTransducer(2, 2, 2, 0, std::move(delta), std::move(lambda));
}

} // namespace delaygame::testing
