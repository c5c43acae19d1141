// Copyright 2026 prismbishop contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "prismbishop/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace prismbishop {

DiagonalMultigraph build_diagonal_multigraph(const DiagonalAtlas& atlas) {
    DiagonalMultigraph graph;
    graph.node_count = atlas.total();
    graph.links.reserve(atlas.square_diagonals.size());
    for (SquareId sq = 0; sq < static_cast<SquareId>(atlas.square_diagonals.size()); ++sq) {
        const auto& pair = atlas.diagonals_of(sq);
        graph.links.push_back({std::min(pair[0], pair[1]), std::max(pair[0], pair[1]), sq});
    }
    return graph;
}

namespace {

// Squares a bishop on `from` can reach, found by walking all four move
// rays square by square.  Independent of the atlas bookkeeping.
std::vector<SquareId> ray_coverage(const Board& board, SquareId from) {
    std::vector<SquareId> covered;
    for (int corner = 0; corner < 4; ++corner) {
        const DiagStep start{from, corner};
        DiagStep cur = start;
        while (true) {
            auto next = board.diagonal_step(cur);
            if (!next || *next == start)
                break;
            covered.push_back(next->square);
            cur = *next;
        }
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return covered;
}

} // namespace

bool is_independent(const Board& board, const DiagonalAtlas& atlas, const Placement& placement) {
    std::vector<SquareId> ids;
    ids.reserve(placement.squares.size());
    for (const Square& sq : placement.squares)
        ids.push_back(board.id_of(sq));
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw Error("placement holds duplicate squares");

    // Route 1: two bishops attack iff they share a maximal diagonal.
    bool by_atlas = true;
    {
        std::map<int, int> hits;
        for (SquareId sq : ids) {
            const auto& pair = atlas.diagonals_of(sq);
            ++hits[pair[0]];
            if (pair[1] != pair[0])
                ++hits[pair[1]];
        }
        for (const auto& [diag, count] : hits) {
            if (count > 1) {
                by_atlas = false;
                break;
            }
        }
    }

    // Route 2: explicit move rays from every bishop.
    bool by_rays = true;
    {
        std::vector<char> occupied(static_cast<std::size_t>(board.square_count()), 0);
        for (SquareId sq : ids)
            occupied[static_cast<std::size_t>(sq)] = 1;
        for (SquareId sq : ids) {
            for (SquareId reached : ray_coverage(board, sq)) {
                if (reached != sq && occupied[static_cast<std::size_t>(reached)]) {
                    by_rays = false;
                    break;
                }
            }
            if (!by_rays)
                break;
        }
    }

    if (by_atlas != by_rays)
        throw ConsistencyError("atlas incidence and move rays disagree about independence");
    return by_atlas;
}

namespace {

using MatchingGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Matching over diagonals with parallel links collapsed; the witness picks
// the smallest square for each matched pair.
struct MatchingOutcome {
    int size = 0;
    std::vector<std::pair<int, int>> pairs;
};

MatchingOutcome run_matching(const DiagonalMultigraph& graph) {
    std::map<std::pair<int, int>, SquareId> representative;
    for (const auto& link : graph.links) {
        auto key = std::make_pair(link.a, link.b);
        auto it = representative.find(key);
        if (it == representative.end() || link.square < it->second)
            representative[key] = link.square;
    }

    MatchingGraph g(static_cast<std::size_t>(graph.node_count));
    for (const auto& [key, square] : representative)
        boost::add_edge(static_cast<std::size_t>(key.first), static_cast<std::size_t>(key.second), g);

    std::vector<boost::graph_traits<MatchingGraph>::vertex_descriptor> mate(
        static_cast<std::size_t>(graph.node_count));
    if (!boost::checked_edmonds_maximum_cardinality_matching(g, &mate[0]))
        throw ConsistencyError("matching verification failed");

    MatchingOutcome outcome;
    const auto null_vertex = boost::graph_traits<MatchingGraph>::null_vertex();
    for (int v = 0; v < graph.node_count; ++v) {
        const auto partner = mate[static_cast<std::size_t>(v)];
        if (partner != null_vertex && static_cast<int>(partner) > v) {
            outcome.pairs.emplace_back(v, static_cast<int>(partner));
            ++outcome.size;
        }
    }
    return outcome;
}

} // namespace

SolveResult independence_number(const Board& board, const DiagonalAtlas& atlas) {
    if (!atlas.self_crossing_ids.empty())
        return {brute_force_oracle(board, atlas), true};
    return {run_matching(build_diagonal_multigraph(atlas)).size, false};
}

Placement max_placement(const Board& board, const DiagonalAtlas& atlas) {
    Placement placement;
    placement.spec = board.spec();
    placement.origin = "solver-witness";
    if (!atlas.self_crossing_ids.empty())
        throw StructuralError("matching witness unavailable: a diagonal self-crosses");

    const DiagonalMultigraph graph = build_diagonal_multigraph(atlas);
    std::map<std::pair<int, int>, SquareId> representative;
    for (const auto& link : graph.links) {
        auto key = std::make_pair(link.a, link.b);
        auto it = representative.find(key);
        if (it == representative.end() || link.square < it->second)
            representative[key] = link.square;
    }
    for (const auto& [a, b] : run_matching(graph).pairs)
        placement.squares.push_back(board.square_at(representative.at({a, b})));
    placement.normalize(board);
    return placement;
}

int brute_force_oracle(const Board& board, const DiagonalAtlas& atlas, int square_cap) {
    const int square_count = board.square_count();
    if (square_count > square_cap)
        throw Error("oracle refuses boards above " + std::to_string(square_cap) + " squares (" +
                    std::to_string(square_count) + " requested)");
    if (square_count > 64 || atlas.total() > 64)
        throw Error("oracle is limited to 64 squares and 64 diagonals");

    std::vector<std::uint64_t> conflict(static_cast<std::size_t>(square_count), 0);
    std::vector<std::uint64_t> diag_bits(static_cast<std::size_t>(square_count), 0);
    {
        std::vector<std::vector<SquareId>> by_diag(static_cast<std::size_t>(atlas.total()));
        for (SquareId sq = 0; sq < square_count; ++sq) {
            const auto& pair = atlas.diagonals_of(sq);
            diag_bits[static_cast<std::size_t>(sq)] =
                (1ULL << pair[0]) | (1ULL << pair[1]);
            by_diag[static_cast<std::size_t>(pair[0])].push_back(sq);
            if (pair[1] != pair[0])
                by_diag[static_cast<std::size_t>(pair[1])].push_back(sq);
        }
        for (const auto& squares : by_diag)
            for (SquareId a : squares)
                for (SquareId b : squares)
                    if (a != b)
                        conflict[static_cast<std::size_t>(a)] |= 1ULL << b;
    }

    const int total_diags = atlas.total();
    const bool any_self_cross = !atlas.self_crossing_ids.empty();
    int best = 0;

    // Branch and bound over the candidate-square bitmask.  Admissible
    // bound: each further bishop blocks 2 fresh diagonals (1 if a square
    // can sit on a self-crossing diagonal).
    auto dfs = [&](auto&& self, std::uint64_t candidates, std::uint64_t used_diags,
                   int count) -> void {
        best = std::max(best, count);
        if (candidates == 0)
            return;
        const int free_diags = total_diags - std::popcount(used_diags);
        const int headroom = any_self_cross ? free_diags : free_diags / 2;
        if (count + std::min(std::popcount(candidates), headroom) <= best)
            return;
        const int sq = std::countr_zero(candidates);
        const std::uint64_t bit = 1ULL << sq;
        // Take sq.
        self(self, candidates & ~(conflict[static_cast<std::size_t>(sq)] | bit),
             used_diags | diag_bits[static_cast<std::size_t>(sq)], count + 1);
        // Skip sq.
        self(self, candidates & ~bit, used_diags, count);
    };
    const std::uint64_t all =
        square_count == 64 ? ~0ULL : ((1ULL << square_count) - 1);
    dfs(dfs, all, 0, 0);
    return best;
}

} // namespace prismbishop
