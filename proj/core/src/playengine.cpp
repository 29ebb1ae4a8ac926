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

#include "delaygame/playengine.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <utility>

#include "delaygame/gamesolve.hpp"

namespace delaygame {

AdversarySource::AdversarySource(const AdversaryChoice &choice, std::size_t inputs) : choice_(choice), inputs_(inputs)
{
    if (inputs_ == 0) throw InputError("empty input alphabet");
    if (const auto *s = std::get_if<ScriptedAdversary>(&choice_)) {
        if (s->period.empty()) throw InputError("adversary period must be nonempty");
        for (const auto *part : {&s->prefix, &s->period})
            for (Symbol a : *part)
                if (a >= inputs_) throw InputError("adversary letter not in Σ_I");
    } else {
        rng_.seed(std::get<RandomAdversary>(choice_).seed);
    }
}

Symbol AdversarySource::next()
{
    if (const auto *s = std::get_if<ScriptedAdversary>(&choice_)) {
        const std::size_t pos = position_++;
        return pos < s->prefix.size() ? s->prefix[pos] : s->period[(pos - s->prefix.size()) % s->period.size()];
    }
    ++position_;
    return static_cast<Symbol>(rng_() % inputs_);
}

std::optional<std::size_t> AdversarySource::phase() const
{
    const auto *s = std::get_if<ScriptedAdversary>(&choice_);
    if (!s) return std::nullopt;
    if (position_ < s->prefix.size()) return position_;
    return s->prefix.size() + (position_ - s->prefix.size()) % s->period.size();
}

namespace {

void check_alphabets(const OmegaAutomaton &a, std::size_t inputs, std::size_t outputs)
{
    if (a.input_count() != inputs || a.output_count() != outputs)
        throw InputError("strategy alphabets do not match the automaton");
}

void check_block_config(const BlockGameConfig &config, const BlockStrategy &strategy)
{
    check_alphabets(config.automaton, strategy.input_count(), strategy.output_count());
    if (config.block_length == 0) throw InputError("block length must be at least 1");
    if (strategy.block_length() != config.block_length)
        throw InputError("strategy block length " + std::to_string(strategy.block_length()) +
                         " does not match the game's " + std::to_string(config.block_length));
}

void check_delay_config(const DelayGameConfig &config, const LetterStrategy &strategy)
{
    check_alphabets(config.automaton, strategy.input_count(), strategy.output_count());
    if (config.lookahead == 0) throw InputError("lookahead must be at least 1");
    if (strategy.lookahead() != config.lookahead)
        throw InputError("strategy lookahead " + std::to_string(strategy.lookahead()) + " does not match the game's " +
                         std::to_string(config.lookahead));
}

std::vector<Symbol> read_block(AdversarySource &source, std::size_t d)
{
    std::vector<Symbol> block(d);
    for (auto &a : block) a = source.next();
    return block;
}

std::vector<Symbol> checked_answer(std::vector<Symbol> b, std::size_t d, std::size_t outputs)
{
    if (b.size() != d) throw InputError("strategy answered a block of the wrong length");
    for (Symbol x : b)
        if (x >= outputs) throw InputError("strategy output not in Σ_O");
    return b;
}

Symbol checked_letter(Symbol b, std::size_t outputs)
{
    if (b >= outputs) throw InputError("strategy output not in Σ_O");
    return b;
}

AdversaryVerdict close_lasso(const OmegaAutomaton &a, const std::vector<Letter> &outcome, std::size_t start,
                             std::size_t rounds)
{
    AdversaryVerdict v;
    v.conclusive = true;
    v.rounds = rounds;
    v.outcome.prefix.assign(outcome.begin(), outcome.begin() + static_cast<std::ptrdiff_t>(start));
    v.outcome.period.assign(outcome.begin() + static_cast<std::ptrdiff_t>(start), outcome.end());
    v.accepted = accepts_lasso(a, v.outcome);
    return v;
}

void record(Verification &out, AdversaryVerdict v)
{
    if (!v.accepted) {
        out.all_accepted = false;
        if (!out.counterexample) out.counterexample = out.verdicts.size();
    }
    out.verdicts.push_back(std::move(v));
}

} // namespace

PlayRecord simulate(const BlockGameConfig &config, const BlockStrategy &strategy, const AdversaryChoice &adversary,
                    std::size_t rounds)
{
    check_block_config(config, strategy);
    PlayRecord play;
    if (rounds == 0) return play;
    const OmegaAutomaton &a = config.automaton;
    const std::size_t d = config.block_length;
    AdversarySource source(adversary, a.input_count());
    play.inputs.push_back(read_block(source, d));
    play.inputs.push_back(read_block(source, d));
    StrategyState g = strategy.initial();
    for (std::size_t i = 0; i < rounds; ++i) {
        if (i > 0) play.inputs.push_back(read_block(source, d));
        auto b = checked_answer(strategy.output(g, play.inputs[i], play.inputs[i + 1]), d, a.output_count());
        for (std::size_t j = 0; j < d; ++j) play.outcome.push_back({play.inputs[i][j], b[j]});
        play.outputs.push_back(std::move(b));
        g = strategy.next(g, play.inputs[i]);
    }
    return play;
}

PlayRecord simulate(const DelayGameConfig &config, const LetterStrategy &strategy, const AdversaryChoice &adversary,
                    std::size_t rounds)
{
    check_delay_config(config, strategy);
    PlayRecord play;
    if (rounds == 0) return play;
    const OmegaAutomaton &a = config.automaton;
    AdversarySource source(adversary, a.input_count());
    std::vector<Symbol> letters;
    StrategyState s = strategy.initial();
    for (std::size_t i = 0; i < rounds; ++i) {
        std::vector<Symbol> x = i == 0 ? read_block(source, config.lookahead) : std::vector<Symbol>{source.next()};
        for (Symbol c : x) {
            s = strategy.next(s, c);
            letters.push_back(c);
        }
        const Symbol b = checked_letter(strategy.output(s), a.output_count());
        play.outcome.push_back({letters[i], b});
        play.inputs.push_back(std::move(x));
        play.outputs.push_back({b});
    }
    return play;
}

Verification verify_strategy(const BlockGameConfig &config, const BlockStrategy &strategy,
                             const std::vector<ScriptedAdversary> &adversaries, std::size_t max_rounds)
{
    check_block_config(config, strategy);
    const OmegaAutomaton &a = config.automaton;
    const std::size_t d = config.block_length;
    Verification out;
    for (const ScriptedAdversary &adv : adversaries) {
        AdversarySource source(adv, a.input_count());
        std::map<std::vector<std::uint64_t>, std::size_t> seen;
        std::vector<Letter> outcome;
        StrategyState g = strategy.initial();
        StateId q = a.initial();
        std::vector<Symbol> cur = read_block(source, d);
        AdversaryVerdict verdict;
        for (std::size_t round = 0; round <= max_rounds; ++round) {
            if (round > 0) {
                std::vector<std::uint64_t> key{*source.phase(), g, q};
                key.insert(key.end(), cur.begin(), cur.end());
                auto [it, fresh] = seen.try_emplace(std::move(key), round);
                if (!fresh) {
                    verdict = close_lasso(a, outcome, it->second * d, round);
                    break;
                }
            }
            if (round == max_rounds) break;
            std::vector<Symbol> nxt = read_block(source, d);
            const auto b = checked_answer(strategy.output(g, cur, nxt), d, a.output_count());
            for (std::size_t j = 0; j < d; ++j) {
                const Letter l{cur[j], b[j]};
                q = a.next_unchecked(q, a.letter_index(l));
                outcome.push_back(l);
            }
            g = strategy.next(g, cur);
            cur = std::move(nxt);
        }
        if (!verdict.conclusive) verdict.rounds = max_rounds;
        record(out, std::move(verdict));
    }
    return out;
}

Verification verify_strategy(const DelayGameConfig &config, const LetterStrategy &strategy,
                             const std::vector<ScriptedAdversary> &adversaries, std::size_t max_rounds)
{
    check_delay_config(config, strategy);
    const OmegaAutomaton &a = config.automaton;
    Verification out;
    for (const ScriptedAdversary &adv : adversaries) {
        AdversarySource source(adv, a.input_count());
        std::map<std::vector<std::uint64_t>, std::size_t> seen;
        std::vector<Letter> outcome;
        StateId q = a.initial();
        StrategyState s = strategy.initial();
        std::deque<Symbol> pending;
        AdversaryVerdict verdict;
        for (std::size_t round = 0; round <= max_rounds; ++round) {
            if (round > 0) {
                std::vector<std::uint64_t> key{*source.phase(), s, q};
                key.insert(key.end(), pending.begin(), pending.end());
                auto [it, fresh] = seen.try_emplace(std::move(key), round);
                if (!fresh) {
                    verdict = close_lasso(a, outcome, it->second, round);
                    break;
                }
            }
            if (round == max_rounds) break;
            const std::size_t count = round == 0 ? config.lookahead : 1;
            for (std::size_t i = 0; i < count; ++i) {
                const Symbol c = source.next();
                s = strategy.next(s, c);
                pending.push_back(c);
            }
            const Letter l{pending.front(), checked_letter(strategy.output(s), a.output_count())};
            pending.pop_front();
            q = a.next_unchecked(q, a.letter_index(l));
            outcome.push_back(l);
        }
        if (!verdict.conclusive) verdict.rounds = max_rounds;
        record(out, std::move(verdict));
    }
    return out;
}

std::vector<ScriptedAdversary> random_lassos(std::size_t inputs, std::size_t count, std::uint64_t seed,
                                             std::size_t max_prefix, std::size_t max_period)
{
    if (inputs == 0 || max_period == 0) throw InputError("random lassos need letters and a nonempty period");
    std::mt19937_64 rng(seed);
    std::vector<ScriptedAdversary> out(count);
    for (auto &adv : out) {
        adv.prefix.resize(rng() % (max_prefix + 1));
        adv.period.resize(1 + rng() % max_period);
        for (auto &a : adv.prefix) a = static_cast<Symbol>(rng() % inputs);
        for (auto &a : adv.period) a = static_cast<Symbol>(rng() % inputs);
    }
    return out;
}

Player brute_force_winner(const OmegaAutomaton &automaton, std::size_t lookahead, const Budget &budget)
{
    const OmegaAutomaton parity = automaton.is_parity() ? automaton : lar_convert(automaton);
    const DelayArena arena = build_delay_oblivious_arena(parity, lookahead, budget);
    return solve(arena.arena).winner_at(0);
}

namespace {

/** Player I's residual one-player game against a fixed transducer. */
class ResidualGame {
public:
    ResidualGame(const OmegaAutomaton &a, std::size_t lookahead, std::size_t states)
        : a_(a), d_(lookahead), states_(states), inputs_(a.input_count())
    {
        queue_ = 1;
        for (std::size_t i = 1; i < d_; ++i) queue_ *= inputs_;
        nodes_ = a.state_count() * queue_ * states_;
        colors_ = a.color_set();
    }

    std::size_t nodes() const noexcept { return nodes_; }

    /** True iff Player I can force an odd limsup against the transducer (δ, λ) started in 0. */
    bool player_i_wins(const std::uint32_t *delta, const Symbol *lambda)
    {
        succ_.assign(nodes_ * inputs_, 0);
        reach_.assign(nodes_, 0);
        stack_.clear();
        const std::size_t full = queue_ * inputs_;
        for (std::size_t x = 0; x < full; ++x) {
            std::uint32_t s = 0;
            std::size_t code = x;
            std::size_t unit = full;
            for (std::size_t i = 0; i < d_; ++i) {
                unit /= inputs_;
                s = delta[s * inputs_ + code / unit];
                code %= unit;
            }
            const auto head = static_cast<Symbol>(x / queue_);
            const StateId q = a_.next_unchecked(a_.initial(), a_.letter_index({head, lambda[s]}));
            mark(node(q, x % queue_, s));
        }
        while (!stack_.empty()) {
            const std::size_t v = stack_.back();
            stack_.pop_back();
            const std::size_t s = v % states_;
            const std::size_t w = (v / states_) % queue_;
            const auto q = static_cast<StateId>(v / states_ / queue_);
            for (std::size_t c = 0; c < inputs_; ++c) {
                const std::uint32_t t = delta[s * inputs_ + c];
                const std::size_t code = w * inputs_ + c;
                const auto head = static_cast<Symbol>(code / queue_);
                const StateId r = a_.next_unchecked(q, a_.letter_index({head, lambda[t]}));
                const std::size_t u = node(r, code % queue_, t);
                succ_[v * inputs_ + c] = static_cast<std::uint32_t>(u);
                mark(u);
            }
        }
        for (unsigned p : colors_)
            if (p % 2 == 1 && odd_cycle(p)) return true;
        return false;
    }

private:
    std::size_t node(StateId q, std::size_t w, std::size_t s) const { return (q * queue_ + w) * states_ + s; }
    unsigned color(std::size_t v) const { return a_.color(static_cast<StateId>(v / states_ / queue_)); }

    void mark(std::size_t v)
    {
        if (!reach_[v]) {
            reach_[v] = 1;
            stack_.push_back(v);
        }
    }

    bool allowed(std::size_t v, unsigned p) const { return reach_[v] && color(v) <= p; }

    /** Iterative Tarjan on the reachable nodes of color ≤ p; looks for a cycle through color p. */
    bool odd_cycle(unsigned p)
    {
        constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
        index_.assign(nodes_, unset);
        low_.assign(nodes_, 0);
        on_.assign(nodes_, 0);
        scc_.clear();
        std::uint32_t counter = 0;
        std::vector<std::pair<std::size_t, std::size_t>> calls;
        for (std::size_t root = 0; root < nodes_; ++root) {
            if (!allowed(root, p) || index_[root] != unset) continue;
            calls.push_back({root, 0});
            index_[root] = low_[root] = counter++;
            scc_.push_back(root);
            on_[root] = 1;
            while (!calls.empty()) {
                auto &[v, i] = calls.back();
                if (i < inputs_) {
                    const std::size_t u = succ_[v * inputs_ + i++];
                    if (!allowed(u, p)) continue;
                    if (index_[u] == unset) {
                        index_[u] = low_[u] = counter++;
                        scc_.push_back(u);
                        on_[u] = 1;
                        calls.push_back({u, 0});
                    } else if (on_[u]) {
                        low_[v] = std::min(low_[v], index_[u]);
                    }
                    continue;
                }
                const std::size_t done = v;
                calls.pop_back();
                if (!calls.empty()) low_[calls.back().first] = std::min(low_[calls.back().first], low_[done]);
                if (low_[done] != index_[done]) continue;
                std::vector<std::size_t> members;
                std::size_t u;
                do {
                    u = scc_.back();
                    scc_.pop_back();
                    on_[u] = 0;
                    members.push_back(u);
                } while (u != done);
                if (cyclic(members, p)) return true;
            }
        }
        return false;
    }

    bool cyclic(const std::vector<std::size_t> &members, unsigned p) const
    {
        bool top = false;
        for (std::size_t v : members) top = top || color(v) == p;
        if (!top) return false;
        if (members.size() > 1) return true;
        const std::size_t v = members.front();
        for (std::size_t c = 0; c < inputs_; ++c)
            if (succ_[v * inputs_ + c] == v) return true;
        return false;
    }

    const OmegaAutomaton &a_;
    std::size_t d_;
    std::size_t states_;
    std::size_t inputs_;
    std::size_t queue_ = 1;
    std::size_t nodes_ = 0;
    std::vector<unsigned> colors_;
    std::vector<std::uint32_t> succ_;
    std::vector<char> reach_;
    std::vector<std::size_t> stack_;
    std::vector<std::uint32_t> index_;
    std::vector<std::uint32_t> low_;
    std::vector<char> on_;
    std::vector<std::size_t> scc_;
};

void check_search_input(const OmegaAutomaton &a, std::size_t lookahead)
{
    if (!a.is_parity()) throw InputError("transducer search needs a parity automaton");
    if (lookahead == 0) throw InputError("lookahead must be at least 1");
}

} // namespace

bool transducer_wins(const OmegaAutomaton &automaton, const DelayObliviousTransducer &transducer)
{
    check_search_input(automaton, transducer.lookahead());
    check_alphabets(automaton, transducer.input_count(), transducer.output_count());
    const std::size_t n = *transducer.state_count();
    std::vector<std::uint32_t> delta(transducer.delta());
    std::vector<Symbol> lambda(transducer.lambda());
    if (transducer.initial() != 0) {
        // Relabel so that the initial state is 0.
        const auto init = static_cast<std::uint32_t>(transducer.initial());
        auto swap_id = [&](std::uint32_t s) { return s == 0 ? init : s == init ? 0 : s; };
        std::vector<std::uint32_t> d2(delta.size());
        std::vector<Symbol> l2(n);
        const std::size_t k = transducer.input_count();
        for (std::uint32_t s = 0; s < n; ++s) {
            l2[swap_id(s)] = lambda[s];
            for (std::size_t c = 0; c < k; ++c) d2[swap_id(s) * k + c] = swap_id(delta[s * k + c]);
        }
        delta = std::move(d2);
        lambda = std::move(l2);
    }
    ResidualGame game(automaton, transducer.lookahead(), n);
    return !game.player_i_wins(delta.data(), lambda.data());
}

SearchResult exhaustive_transducer_search(const OmegaAutomaton &automaton, std::size_t lookahead,
                                          std::size_t state_bound, const Budget &budget)
{
    check_search_input(automaton, lookahead);
    if (state_bound == 0) throw InputError("state bound must be at least 1");
    const std::size_t k = automaton.input_count();
    const std::size_t outputs = automaton.output_count();

    std::uint64_t total = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < state_bound; ++i) overflow |= __builtin_mul_overflow(total, outputs, &total);
    for (std::size_t i = 0; i < state_bound * k; ++i) overflow |= __builtin_mul_overflow(total, state_bound, &total);
    if (overflow || total > budget.max_candidates)
        throw ResourceError("transducer search needs more than " + std::to_string(budget.max_candidates) +
                            " candidates");

    ResidualGame game(automaton, lookahead, state_bound);
    if (game.nodes() > budget.max_vertices) throw ResourceError("residual game exceeds the vertex budget");

    std::vector<std::uint32_t> delta(state_bound * k, 0);
    std::vector<Symbol> lambda(state_bound, 0);
    SearchResult out;
    for (;;) {
        ++out.candidates;
        if (!game.player_i_wins(delta.data(), lambda.data())) {
            out.found = true;
            out.witness.emplace(k, outputs, lookahead, 0, delta, lambda);
            return out;
        }
        std::size_t i = 0;
        for (; i < lambda.size(); ++i) {
            if (++lambda[i] < outputs) break;
            lambda[i] = 0;
        }
        if (i < lambda.size()) continue;
        std::size_t j = 0;
        for (; j < delta.size(); ++j) {
            if (++delta[j] < state_bound) break;
            delta[j] = 0;
        }
        if (j == delta.size()) return out;
    }
}

} // namespace delaygame
