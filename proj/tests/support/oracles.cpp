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

#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "delaygame/io.hpp"

namespace delaygame::testing {

std::string corpus_path(const std::string &name) { return std::string(DELAYGAME_CORPUS_DIR) + "/" + name; }

OmegaAutomaton corpus(const std::string &name) { return load_automaton(corpus_path(name)); }

bool unfold_accepts(const OmegaAutomaton &a, const LassoWord &word)
{
    const std::size_t n = a.state_count();
    const std::size_t u = word.prefix.size();
    const std::size_t v = word.period.size();
    auto letter = [&](std::size_t i) { return i < u ? word.prefix[i] : word.period[(i - u) % v]; };
    StateId q = a.initial();
    const std::size_t start = u + n * v;
    const std::size_t end = start + n * v;
    std::set<StateId> seen;
    unsigned top = 0;
    for (std::size_t i = 0; i < end; ++i) {
        if (i >= start) {
            seen.insert(q);
            if (a.is_parity()) top = std::max(top, a.color(q));
        }
        q = a.next(q, letter(i));
    }
    if (a.is_parity()) return top % 2 == 0;
    return a.in_family(StateSet(seen.begin(), seen.end()));
}

LassoWord random_lasso(const OmegaAutomaton &a, std::mt19937_64 &rng, std::size_t max_prefix, std::size_t max_period)
{
    auto letter = [&] {
        return Letter{static_cast<Symbol>(rng() % a.input_count()), static_cast<Symbol>(rng() % a.output_count())};
    };
    LassoWord w;
    w.prefix.resize(rng() % (max_prefix + 1));
    w.period.resize(1 + rng() % max_period);
    for (auto &l : w.prefix) l = letter();
    for (auto &l : w.period) l = letter();
    return w;
}

namespace {

std::vector<std::string> names(const char *stem, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

std::vector<StateId> random_delta(std::mt19937_64 &rng, std::size_t states, std::size_t letters)
{
    std::vector<StateId> delta(states * letters);
    for (auto &t : delta) t = static_cast<StateId>(rng() % states);
    return delta;
}

} // namespace

OmegaAutomaton random_parity(std::mt19937_64 &rng, std::size_t max_states, unsigned colors, std::size_t inputs,
                             std::size_t outputs)
{
    const std::size_t n = 1 + rng() % max_states;
    std::vector<unsigned> color(n);
    for (auto &c : color) c = static_cast<unsigned>(rng() % colors);
    return OmegaAutomaton::parity(names("i", inputs), names("o", outputs), names("q", n), 0,
                                  random_delta(rng, n, inputs * outputs), std::move(color));
}

OmegaAutomaton random_muller(std::mt19937_64 &rng, std::size_t max_states, std::size_t inputs, std::size_t outputs)
{
    const std::size_t n = 1 + rng() % max_states;
    std::vector<StateSet> family;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        if (rng() % 2 == 0) continue;
        StateSet set;
        for (StateId q = 0; q < n; ++q)
            if (mask >> q & 1) set.push_back(q);
        family.push_back(std::move(set));
    }
    return OmegaAutomaton::muller(names("i", inputs), names("o", outputs), names("q", n), 0,
                                  random_delta(rng, n, inputs * outputs), std::move(family));
}

std::vector<std::vector<Symbol>> all_words(std::size_t inputs, std::size_t length)
{
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> w(length, 0);
    for (;;) {
        out.push_back(w);
        std::size_t i = length;
        while (i > 0 && ++w[i - 1] == inputs) w[--i] = 0;
        if (i == 0) return out;
    }
}

std::vector<Symbol> enumerate_witness(const ProductAutomaton &product, StateId q, const std::vector<Symbol> &block,
                                      ProductState target)
{
    const OmegaAutomaton &a = product.automaton();
    for (const auto &b : all_words(a.output_count(), block.size())) {
        ProductState s{q, kBottom};
        for (std::size_t j = 0; j < block.size(); ++j) s = product.step(s, Letter{block[j], b[j]});
        if (s == target) return b;
    }
    return {};
}

namespace {

/** SCCs of the subgraph given by `edges`; returns a component id per vertex. */
std::vector<std::size_t> components(std::size_t n, const std::vector<std::pair<VertexId, VertexId>> &edges)
{
    std::vector<std::vector<VertexId>> adj(n), radj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        radj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<VertexId> order;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<VertexId, std::size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto &[v, i] = stack.back();
            if (i < adj[v].size()) {
                const VertexId w = adj[v][i++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::size_t> comp(n, static_cast<std::size_t>(-1));
    std::size_t count = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] != static_cast<std::size_t>(-1)) continue;
        std::vector<VertexId> stack{*it};
        comp[*it] = count;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : radj[v])
                if (comp[w] == static_cast<std::size_t>(-1)) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return comp;
}

} // namespace

std::string check_solution(const ParityGameArena &arena, const SolveResult &result)
{
    const std::size_t n = arena.vertex_count();
    if (result.winner.size() != n || result.strategy.size() != n) return "result has the wrong size";
    for (Player p : {Player::I, Player::O}) {
        std::vector<EdgeId> kept;
        for (VertexId v = 0; v < n; ++v) {
            if (result.winner[v] != p) continue;
            if (arena.owner(v) == p) {
                const EdgeId e = result.strategy[v];
                if (e == kNoEdge || arena.edge(e).from != v) return "missing strategy edge at vertex " + std::to_string(v);
                if (result.winner[arena.edge(e).to] != p) return "strategy leaves the region at " + std::to_string(v);
                kept.push_back(e);
            } else {
                for (EdgeId e : arena.out_edges(v)) {
                    if (result.winner[arena.edge(e).to] != p) return "opponent escapes at " + std::to_string(v);
                    kept.push_back(e);
                }
            }
        }
        std::set<unsigned> priorities;
        for (EdgeId e : kept) priorities.insert(arena.edge(e).priority);
        for (unsigned bad : priorities) {
            if (parity_winner(bad) == p) continue;
            std::vector<std::pair<VertexId, VertexId>> sub;
            for (EdgeId e : kept)
                if (arena.edge(e).priority <= bad) sub.push_back({arena.edge(e).from, arena.edge(e).to});
            const auto comp = components(n, sub);
            for (EdgeId e : kept) {
                const Edge &x = arena.edge(e);
                if (x.priority == bad && comp[x.from] == comp[x.to])
                    return "cycle with priority " + std::to_string(bad) + " in the region of Player " +
                           (p == Player::O ? "O" : "I");
            }
        }
    }
    return {};
}

} // namespace delaygame::testing
