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

#include "delaygame/strategies.hpp"

#include <algorithm>
#include <utility>

namespace delaygame {

namespace {

std::optional<std::uint64_t> checked_pow_mul(std::uint64_t n, std::uint64_t base, std::uint64_t exp)
{
    std::uint64_t r = n;
    for (std::uint64_t i = 0; i < exp; ++i)
        if (__builtin_mul_overflow(r, base, &r)) return std::nullopt;
    return r;
}

void check_block(std::span<const Symbol> block, std::size_t length, std::size_t inputs)
{
    if (block.size() != length)
        throw InputError("block has length " + std::to_string(block.size()) + ", expected " + std::to_string(length));
    for (Symbol a : block)
        if (a >= inputs) throw InputError("letter not in Σ_I");
}

} // namespace

std::vector<Symbol> witness_block(const ProductAutomaton &product, StateId q, std::span<const Symbol> block,
                                  ProductState target)
{
    const OmegaAutomaton &a = product.automaton();
    if (block.empty()) throw InputError("witness blocks are nonempty");
    if (q >= a.state_count()) throw InputError("unknown state");
    for (Symbol s : block)
        if (s >= a.input_count()) throw InputError("letter not in Σ_I");

    const std::size_t memory = product.monitor().size() + 1;
    const std::size_t width = a.state_count() * memory;
    auto slot = [&](ProductState s) { return s.q * memory + (s.m == kBottom ? memory - 1 : s.m); };
    auto state_at = [&](std::size_t i) {
        const Memory m = i % memory == memory - 1 ? kBottom : static_cast<Memory>(i % memory);
        return ProductState{static_cast<StateId>(i / memory), m};
    };
    const auto outputs = static_cast<Symbol>(a.output_count());
    const std::size_t n = block.size();

    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(width, 0));
    reach[0][slot({q, kBottom})] = 1;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < width; ++i)
            if (reach[j][i])
                for (Symbol b = 0; b < outputs; ++b)
                    reach[j + 1][slot(product.step(state_at(i), a.letter_index({block[j], b})))] = 1;

    if (target.q >= a.state_count() || (target.m != kBottom && target.m >= memory - 1) || !reach[n][slot(target)])
        throw PreconditionError("target is not reachable on this block");

    std::vector<std::vector<char>> viable(n + 1, std::vector<char>(width, 0));
    viable[n][slot(target)] = 1;
    for (std::size_t j = n; j-- > 0;)
        for (std::size_t i = 0; i < width; ++i)
            if (reach[j][i])
                for (Symbol b = 0; b < outputs && !viable[j][i]; ++b)
                    viable[j][i] = viable[j + 1][slot(product.step(state_at(i), a.letter_index({block[j], b})))];

    std::vector<Symbol> out;
    out.reserve(n);
    ProductState cur{q, kBottom};
    for (std::size_t j = 0; j < n; ++j) {
        for (Symbol b = 0; b < outputs; ++b) {
            const ProductState next = product.step(cur, a.letter_index({block[j], b}));
            if (viable[j + 1][slot(next)]) {
                out.push_back(b);
                cur = next;
                break;
            }
        }
    }
    return out;
}

BlockStrategyBundle::BlockStrategyBundle(GSTransducer transducer, ClassTable table, ProductAutomaton product,
                                         std::size_t block_length)
    : transducer_(std::move(transducer)), table_(std::move(table)), product_(std::move(product)),
      block_length_(block_length)
{
    if (block_length_ == 0) throw InputError("block length must be at least 1");
    if (transducer_.input_count != table_.infinite_classes().size())
        throw InputError("transducer inputs do not match the infinite classes");
}

std::uint32_t BlockStrategyBundle::block_class(std::span<const Symbol> block) const
{
    check_block(block, block_length_, input_count());
    const auto pos = table_.infinite_index(table_.class_of_word(block));
    if (!pos) throw InputError("block lies in a finite class");
    return *pos;
}

StrategyState BlockStrategyBundle::next(StrategyState state, std::span<const Symbol> block) const
{
    return transducer_.next(static_cast<std::uint32_t>(state), block_class(block));
}

ProductState BlockStrategyBundle::commitment(StrategyState state, std::span<const Symbol> block) const
{
    return transducer_.output(static_cast<std::uint32_t>(next(state, block)));
}

std::vector<Symbol> BlockStrategyBundle::output(StrategyState state, std::span<const Symbol> block,
                                                std::span<const Symbol> lookahead) const
{
    const StrategyState after = next(state, block);
    const StateId from = transducer_.output(static_cast<std::uint32_t>(after)).q;
    return witness_block(product_, from, block, commitment(after, lookahead));
}

BlockStrategyBundle gs_to_block(const GSTransducer &transducer, const ClassTable &table,
                                const ProductAutomaton &product, std::size_t block_length)
{
    if (block_length < table.d_min())
        throw InputError("block length " + std::to_string(block_length) + " is below d_min " +
                         std::to_string(table.d_min()));
    return BlockStrategyBundle(transducer, table, product, block_length);
}

DelayObliviousTransducer::DelayObliviousTransducer(std::size_t inputs, std::size_t outputs, std::size_t lookahead,
                                                   std::uint32_t initial, std::vector<std::uint32_t> delta,
                                                   std::vector<Symbol> lambda)
    : inputs_(inputs), outputs_(outputs), lookahead_(lookahead), initial_(initial), delta_(std::move(delta)),
      lambda_(std::move(lambda))
{
    if (inputs_ == 0 || outputs_ == 0) throw InputError("transducer alphabets must be nonempty");
    if (lookahead_ == 0) throw InputError("lookahead must be at least 1");
    if (lambda_.empty() || initial_ >= lambda_.size()) throw InputError("initial state out of range");
    if (delta_.size() != lambda_.size() * inputs_) throw InputError("transition table has the wrong size");
    for (auto t : delta_)
        if (t >= lambda_.size()) throw InputError("transition target out of range");
    for (auto b : lambda_)
        if (b >= outputs_) throw InputError("output letter out of range");
}

DelayExecutor::DelayExecutor(std::shared_ptr<const BlockStrategy> block) : block_(std::move(block))
{
    if (!block_) throw InputError("no block strategy");
    intern(Key{});
}

StrategyState DelayExecutor::intern(Key key) const
{
    std::lock_guard lock(mutex_);
    auto [it, fresh] = index_.try_emplace(key, keys_.size());
    if (fresh) keys_.push_back(std::move(key));
    return it->second;
}

DelayExecutor::Key DelayExecutor::key_of(StrategyState state) const
{
    std::lock_guard lock(mutex_);
    if (state >= keys_.size()) throw InputError("unknown executor state");
    return keys_[state];
}

bool DelayExecutor::steady(StrategyState state) const { return key_of(state).steady; }

std::size_t DelayExecutor::interned() const
{
    std::lock_guard lock(mutex_);
    return keys_.size();
}

StrategyState DelayExecutor::next(StrategyState state, Symbol input) const
{
    if (input >= input_count()) throw InputError("letter not in Σ_I");
    Key key = key_of(state);
    const std::size_t d = block_->block_length();
    key.reading.push_back(input);
    if (!key.steady) {
        if (key.reading.size() < 2 * d) return intern(std::move(key));
        const std::span<const Symbol> all(key.reading);
        const auto first = all.first(d);
        const auto second = all.subspan(d);
        Key out{true, block_->next(block_->initial(), first), {second.begin(), second.end()}, {},
                block_->output(block_->initial(), first, second)};
        return intern(std::move(out));
    }
    key.pending.erase(key.pending.begin());
    if (key.reading.size() < d) return intern(std::move(key));
    Key out{true, block_->next(key.block_state, key.unanswered), key.reading, {},
            block_->output(key.block_state, key.unanswered, key.reading)};
    return intern(std::move(out));
}

Symbol DelayExecutor::output(StrategyState state) const
{
    const Key key = key_of(state);
    return key.steady ? key.pending.front() : 0;
}

DelayConversion block_to_delay(std::shared_ptr<const BlockStrategy> block, const Budget &budget)
{
    auto executor = std::make_shared<DelayExecutor>(block);
    DelayConversion out;
    out.executor = executor;
    out.lookahead = 2 * block->block_length();
    const std::size_t k = block->input_count();
    const auto n = block->state_count();
    if (!n) return out;
    out.block_states = *n;
    out.canonical_bound = checked_pow_mul(*n, k, out.lookahead);
    if (k == 1) {
        out.total_bound = *n * (out.lookahead + 1);
    } else if (auto top = checked_pow_mul(*n, k, out.lookahead + 1)) {
        out.total_bound = (*top - *n) / (k - 1);
    }
    if (!out.canonical_bound || *out.canonical_bound > budget.max_strategy_states) return out;

    for (StrategyState s = 0; s < executor->interned(); ++s) {
        for (Symbol a = 0; a < k; ++a) executor->next(s, a);
        if (executor->interned() > budget.max_strategy_states) return out;
    }
    const std::size_t total = executor->interned();
    out.reachable_states = total;

    std::vector<std::uint32_t> succ(total * k);
    std::vector<char> steady(total);
    std::vector<Symbol> letter(total);
    for (StrategyState s = 0; s < total; ++s) {
        steady[s] = executor->steady(s);
        letter[s] = executor->output(s);
        for (Symbol a = 0; a < k; ++a) succ[s * k + a] = static_cast<std::uint32_t>(executor->next(s, a));
    }

    std::vector<std::uint32_t> part(total, 0);
    for (std::size_t s = 0; s < total; ++s) part[s] = steady[s] ? letter[s] : 0;
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig;
        std::vector<std::uint32_t> refined(total, 0);
        for (std::size_t s = 0; s < total; ++s) {
            if (!steady[s]) continue;
            std::vector<std::uint32_t> key{part[s]};
            for (Symbol a = 0; a < k; ++a) key.push_back(part[succ[s * k + a]]);
            refined[s] = sig.try_emplace(std::move(key), static_cast<std::uint32_t>(sig.size())).first->second;
        }
        part = std::move(refined);
        if (sig.size() == classes) break;
        classes = sig.size();
    }
    out.canonical_states = classes;

    std::vector<std::uint32_t> renumber(total);
    std::uint32_t filling = 0;
    for (std::size_t s = 0; s < total; ++s)
        if (!steady[s]) renumber[s] = filling++;
    for (std::size_t s = 0; s < total; ++s)
        if (steady[s]) renumber[s] = filling + part[s];
    const std::size_t states = filling + classes;
    std::vector<std::uint32_t> delta(states * k);
    std::vector<Symbol> lambda(states, 0);
    for (std::size_t s = 0; s < total; ++s) {
        const std::uint32_t r = renumber[s];
        lambda[r] = letter[s];
        for (Symbol a = 0; a < k; ++a) delta[r * k + a] = renumber[succ[s * k + a]];
    }
    out.transducer.emplace(k, block->output_count(), out.lookahead, renumber[0], std::move(delta), std::move(lambda));
    return out;
}

const DelayObliviousTransducer &materialized(const DelayConversion &conversion)
{
    if (!conversion.transducer) throw ResourceError("delay-oblivious transducer exceeds the strategy budget");
    return *conversion.transducer;
}

BlockTransducer::BlockTransducer(std::shared_ptr<const LetterStrategy> letters) : letters_(std::move(letters))
{
    if (!letters_) throw InputError("no letter strategy");
}

StrategyState BlockTransducer::next(StrategyState state, std::span<const Symbol> block) const
{
    check_block(block, block_length(), input_count());
    for (Symbol a : block) state = letters_->next(state, a);
    return state;
}

std::vector<Symbol> BlockTransducer::output(StrategyState state, std::span<const Symbol> block,
                                            std::span<const Symbol> lookahead) const
{
    check_block(lookahead, block_length(), input_count());
    StrategyState cur = next(state, block);
    std::vector<Symbol> out;
    out.reserve(lookahead.size());
    out.push_back(letters_->output(cur));
    for (std::size_t j = 1; j < lookahead.size(); ++j) {
        cur = letters_->next(cur, lookahead[j - 1]);
        out.push_back(letters_->output(cur));
    }
    return out;
}

BlockTransducer delay_to_block(std::shared_ptr<const LetterStrategy> letters)
{
    return BlockTransducer(std::move(letters));
}

} // namespace delaygame
