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

#include "delaygame/arena.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "delaygame/errors.hpp"

namespace delaygame {

ParityGameArena::ParityGameArena(std::vector<Player> owners, std::vector<Edge> edges, VertexId initial)
    : owners_(std::move(owners)), edges_(std::move(edges)), initial_(initial)
{
    const std::size_t n = owners_.size();
    if (initial_ >= n) throw InputError("initial vertex out of range");
    offsets_.assign(n + 1, 0);
    for (const Edge &e : edges_) {
        if (e.from >= n || e.to >= n) throw InputError("edge endpoint out of range");
        ++offsets_[e.from + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (offsets_[v + 1] == 0) throw InputError("vertex " + std::to_string(v) + " has no successor");
        offsets_[v + 1] += offsets_[v];
    }
    out_.resize(edges_.size());
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) out_[fill[edges_[e].from]++] = e;

    if (!edges_.empty()) {
        auto [lo, hi] = std::minmax_element(edges_.begin(), edges_.end(),
                                            [](const Edge &a, const Edge &b) { return a.priority < b.priority; });
        min_priority_ = lo->priority;
        max_priority_ = hi->priority;
    }
}

namespace {

class Zielonka {
public:
    explicit Zielonka(const VertexParityGame &game) : g_(game)
    {
        const std::size_t n = g_.vertex_count();
        pred_offsets_.assign(n + 1, 0);
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w : g_.succ(v)) ++pred_offsets_[w + 1];
        for (std::size_t v = 0; v < n; ++v) pred_offsets_[v + 1] += pred_offsets_[v];
        preds_.resize(g_.successors.size());
        std::vector<std::uint32_t> fill(pred_offsets_.begin(), pred_offsets_.end() - 1);
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w : g_.succ(v)) preds_[fill[w]++] = v;

        result_.winner.assign(n, Player::I);
        result_.choice.assign(n, kNoVertex);
        count_.assign(n, 0);
    }

    VertexSolution run()
    {
        std::vector<VertexId> all(g_.vertex_count());
        for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
        std::vector<char> in(g_.vertex_count(), 1);
        solve(std::move(all), std::move(in));
        return std::move(result_);
    }

private:
    // Attractor for `who` to `target` inside the subgame `in`. Marks members in `out` and
    // records the attracting successor for `who`'s vertices outside the target.
    std::vector<VertexId> attract(Player who, const std::vector<VertexId> &sub, const std::vector<char> &in,
                                  const std::vector<VertexId> &target, std::vector<char> &out)
    {
        for (VertexId v : sub) {
            if (g_.owner[v] == who) continue;
            std::uint32_t c = 0;
            for (VertexId w : g_.succ(v)) c += in[w] ? 1 : 0;
            count_[v] = c;
        }
        std::vector<VertexId> members;
        std::deque<VertexId> queue;
        for (VertexId t : target) {
            out[t] = 1;
            members.push_back(t);
            queue.push_back(t);
        }
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (std::uint32_t i = pred_offsets_[v]; i < pred_offsets_[v + 1]; ++i) {
                VertexId u = preds_[i];
                if (!in[u] || out[u]) continue;
                if (g_.owner[u] == who) {
                    result_.choice[u] = v;
                } else if (--count_[u] != 0) {
                    continue;
                }
                out[u] = 1;
                members.push_back(u);
                queue.push_back(u);
            }
        }
        return members;
    }

    void solve(std::vector<VertexId> sub, std::vector<char> in)
    {
        while (!sub.empty()) {
            unsigned top = 0;
            for (VertexId v : sub) top = std::max(top, g_.priority[v]);
            const Player alpha = parity_winner(top);
            const Player beta = opponent(alpha);

            std::vector<VertexId> heads;
            for (VertexId v : sub)
                if (g_.priority[v] == top) heads.push_back(v);

            std::vector<char> in_attr(g_.vertex_count(), 0);
            attract(alpha, sub, in, heads, in_attr);

            std::vector<VertexId> rest;
            std::vector<char> in_rest = in;
            for (VertexId v : sub) {
                if (in_attr[v])
                    in_rest[v] = 0;
                else
                    rest.push_back(v);
            }
            if (!rest.empty()) solve(rest, std::move(in_rest));

            std::vector<VertexId> lost;
            for (VertexId v : rest)
                if (result_.winner[v] == beta) lost.push_back(v);

            if (lost.empty()) {
                for (VertexId v : sub) result_.winner[v] = alpha;
                for (VertexId v : heads) {
                    if (g_.owner[v] != alpha) continue;
                    for (VertexId w : g_.succ(v)) {
                        if (in[w]) {
                            result_.choice[v] = w;
                            break;
                        }
                    }
                }
                for (VertexId v : sub)
                    if (g_.owner[v] != alpha) result_.choice[v] = kNoVertex;
                return;
            }

            std::vector<char> in_b(g_.vertex_count(), 0);
            std::vector<VertexId> dominion = attract(beta, sub, in, lost, in_b);
            for (VertexId v : dominion) {
                result_.winner[v] = beta;
                if (g_.owner[v] != beta) result_.choice[v] = kNoVertex;
            }

            std::vector<VertexId> remaining;
            for (VertexId v : sub) {
                if (in_b[v])
                    in[v] = 0;
                else
                    remaining.push_back(v);
            }
            sub = std::move(remaining);
        }
    }

    const VertexParityGame &g_;
    std::vector<std::uint32_t> pred_offsets_;
    std::vector<VertexId> preds_;
    std::vector<std::uint32_t> count_;
    VertexSolution result_;
};

} // namespace

VertexSolution solve(const VertexParityGame &game)
{
    const std::size_t n = game.vertex_count();
    if (game.priority.size() != n || game.offsets.size() != n + 1)
        throw InputError("vertex parity game arrays disagree in size");
    for (VertexId v = 0; v < n; ++v) {
        if (game.offsets[v + 1] <= game.offsets[v]) throw InputError("vertex " + std::to_string(v) + " has no successor");
        for (VertexId w : game.succ(v))
            if (w >= n) throw InputError("successor out of range");
    }
    if (n == 0) return {};
    return Zielonka(game).run();
}

SolveResult solve(const ParityGameArena &arena)
{
    const std::size_t n = arena.vertex_count();
    const std::size_t m = arena.edge_count();
    const unsigned neutral = arena.min_priority();

    // Vertex v keeps id v; the auxiliary vertex of edge e is n + e.
    VertexParityGame split;
    split.owner.reserve(n + m);
    split.priority.reserve(n + m);
    split.offsets.reserve(n + m + 1);
    split.successors.reserve(2 * m);
    split.offsets.push_back(0);
    for (VertexId v = 0; v < n; ++v) {
        split.owner.push_back(arena.owner(v));
        split.priority.push_back(neutral);
        for (EdgeId e : arena.out_edges(v)) split.successors.push_back(static_cast<VertexId>(n + e));
        split.offsets.push_back(static_cast<std::uint32_t>(split.successors.size()));
    }
    for (EdgeId e = 0; e < m; ++e) {
        split.owner.push_back(Player::I);
        split.priority.push_back(arena.edge(e).priority);
        split.successors.push_back(arena.edge(e).to);
        split.offsets.push_back(static_cast<std::uint32_t>(split.successors.size()));
    }

    VertexSolution sol = solve(split);
    SolveResult result;
    result.winner.assign(sol.winner.begin(), sol.winner.begin() + static_cast<std::ptrdiff_t>(n));
    result.strategy.assign(n, kNoEdge);
    for (VertexId v = 0; v < n; ++v) {
        if (arena.owner(v) != result.winner[v] || sol.choice[v] == kNoVertex) continue;
        result.strategy[v] = sol.choice[v] - static_cast<VertexId>(n);
    }
    return result;
}

} // namespace delaygame
