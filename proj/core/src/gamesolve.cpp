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

#include "delaygame/gamesolve.hpp"

#include <limits>
#include <map>
#include <utility>

namespace delaygame {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b)
{
    std::size_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("arena size overflows");
    return r;
}

std::size_t checked_add(std::size_t a, std::size_t b)
{
    std::size_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("arena size overflows");
    return r;
}

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace

std::size_t delay_arena_size(const OmegaAutomaton &automaton, std::size_t lookahead)
{
    if (lookahead == 0) throw InputError("lookahead must be at least 1");
    const std::size_t queue = power(automaton.input_count(), lookahead - 1);
    const std::size_t full = checked_mul(queue, automaton.input_count());
    return checked_add(1, checked_add(checked_mul(automaton.transition_count(), queue),
                                      checked_mul(automaton.state_count(), full)));
}

DelayArena build_gs_arena(const OmegaAutomaton &automaton)
{
    return build_delay_oblivious_arena(automaton, 1, Budget{.max_vertices = std::numeric_limits<std::size_t>::max()});
}

DelayArena build_delay_oblivious_arena(const OmegaAutomaton &automaton, std::size_t lookahead, const Budget &budget)
{
    if (!automaton.is_parity()) throw InputError("delay arenas need a parity automaton");
    const std::size_t total = delay_arena_size(automaton, lookahead);
    if (total > budget.max_vertices)
        throw ResourceError("delay arena needs " + std::to_string(total) + " vertices, budget is " +
                            std::to_string(budget.max_vertices));

    const std::size_t k = automaton.input_count();
    const std::size_t outputs = automaton.output_count();
    const std::size_t letters = automaton.letter_count();
    const std::size_t transitions = automaton.transition_count();
    const std::size_t queue = power(k, lookahead - 1);
    const std::size_t full = queue * k;

    DelayArena out;
    out.lookahead = lookahead;
    out.queue_vertices = queue;
    auto o_vertex = [&](StateId q, std::size_t w) { return static_cast<VertexId>(1 + transitions * queue + q * full + w); };

    std::vector<Player> owners(total, Player::I);
    std::vector<Edge> edges;
    edges.reserve(full + transitions * queue * k + automaton.state_count() * full * outputs);

    for (std::size_t w = 0; w < full; ++w) edges.push_back({0, o_vertex(automaton.initial(), w), 0});
    for (std::size_t t = 0; t < transitions; ++t) {
        const auto source = static_cast<StateId>(t / letters);
        const StateId target = automaton.delta()[t];
        const unsigned color = automaton.color(source);
        for (std::size_t w = 0; w < queue; ++w)
            for (std::size_t a = 0; a < k; ++a)
                edges.push_back({out.transition_vertex(t, w), o_vertex(target, w * k + a), color});
    }
    for (StateId q = 0; q < automaton.state_count(); ++q) {
        for (std::size_t code = 0; code < full; ++code) {
            const VertexId v = o_vertex(q, code);
            owners[v] = Player::O;
            const std::size_t head = code / queue;
            const std::size_t rest = code % queue;
            for (std::size_t b = 0; b < outputs; ++b)
                edges.push_back({v, out.transition_vertex(q * letters + head * outputs + b, rest), 0});
        }
    }
    out.arena = ParityGameArena(std::move(owners), std::move(edges), 0);
    return out;
}

GSTransducer extract_gs_transducer(const ReducedArena &reduced, const SolveResult &result)
{
    const ParityGameArena &arena = reduced.arena;
    const VertexId pre = arena.initial();
    if (result.winner.size() != arena.vertex_count()) throw InputError("solve result does not match the arena");
    if (result.winner_at(pre) != Player::O) throw PreconditionError("Player O does not win the reduced game");

    GSTransducer t;
    t.input_count = reduced.classes.size();
    const ProductState forced = reduced.edge_choice.empty() ? ProductState{} : reduced.edge_choice.front();

    std::map<std::pair<VertexId, ProductState>, std::uint32_t> index;
    std::vector<std::pair<VertexId, ProductState>> states;
    auto intern = [&](VertexId v, ProductState out) {
        auto [it, fresh] = index.try_emplace({v, out}, static_cast<std::uint32_t>(states.size()));
        if (fresh) states.emplace_back(v, out);
        return it->second;
    };
    t.initial = intern(pre, forced);

    for (std::size_t cur = 0; cur < states.size(); ++cur) {
        const VertexId v = states[cur].first;
        for (std::uint32_t s = 0; s < t.input_count; ++s) {
            std::uint32_t next;
            if (cur == t.initial) {
                next = intern(arena.edge(arena.out_edges(pre)[s]).to, forced);
            } else {
                const VertexId o = arena.edge(arena.out_edges(v)[s]).to;
                const EdgeId e = result.strategy.at(o);
                if (e == kNoEdge) throw PreconditionError("positional strategy undefined on Player O's region");
                next = intern(arena.edge(e).to, reduced.edge_choice.at(e));
            }
            t.delta.push_back(next);
        }
    }
    for (const auto &s : states) t.lambda.push_back(s.second);
    return t;
}

} // namespace delaygame
