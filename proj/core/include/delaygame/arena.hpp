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
#include <limits>
#include <span>
#include <vector>

namespace delaygame {

enum class Player : std::uint8_t { I = 0, O = 1 };

inline constexpr Player opponent(Player p) noexcept { return p == Player::I ? Player::O : Player::I; }
/** Player O wins plays whose limsup priority is even. */
inline constexpr Player parity_winner(unsigned priority) noexcept { return priority % 2 == 0 ? Player::O : Player::I; }

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    unsigned priority = 0;
};

/**
 * Two-player arena with priorities on edges. Player O wins a play iff the limsup of the
 * priorities of the traversed edges is even. Immutable after construction.
 */
class ParityGameArena {
public:
    ParityGameArena() = default;
    /** Throws InputError if an edge endpoint is out of range or a vertex has no successor. */
    ParityGameArena(std::vector<Player> owners, std::vector<Edge> edges, VertexId initial);

    std::size_t vertex_count() const noexcept { return owners_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    Player owner(VertexId v) const { return owners_.at(v); }
    const std::vector<Player> &owners() const noexcept { return owners_; }
    const Edge &edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    /** Edge ids leaving `v`, in insertion order. */
    std::span<const EdgeId> out_edges(VertexId v) const
    {
        return {out_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    VertexId initial() const noexcept { return initial_; }
    unsigned max_priority() const noexcept { return max_priority_; }
    unsigned min_priority() const noexcept { return min_priority_; }

private:
    std::vector<Player> owners_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<EdgeId> out_;
    VertexId initial_ = 0;
    unsigned max_priority_ = 0;
    unsigned min_priority_ = 0;
};

/** Winning regions plus a positional strategy (one chosen edge) for each player on its region. */
struct SolveResult {
    std::vector<Player> winner;
    /** Chosen edge for vertices owned by the winner of their region, kNoEdge elsewhere. */
    std::vector<EdgeId> strategy;

    Player winner_at(VertexId v) const { return winner.at(v); }
};

/** Parity game with priorities on vertices; successors in CSR form. */
struct VertexParityGame {
    std::vector<Player> owner;
    std::vector<unsigned> priority;
    std::vector<std::uint32_t> offsets; ///< size |V|+1
    std::vector<VertexId> successors;

    std::size_t vertex_count() const noexcept { return owner.size(); }
    std::span<const VertexId> succ(VertexId v) const
    {
        return {successors.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

struct VertexSolution {
    std::vector<Player> winner;
    /** Chosen successor for vertices owned by the winner of their region, kNoVertex elsewhere. */
    std::vector<VertexId> choice;
};

/** Zielonka's recursive algorithm on a vertex-priority game. Ties are broken by vertex order. */
VertexSolution solve(const VertexParityGame &game);

/**
 * Solves an edge-priority arena. Every edge is split by an auxiliary vertex carrying its
 * priority; original vertices carry the global minimum priority.
 */
SolveResult solve(const ParityGameArena &arena);

} // namespace delaygame
