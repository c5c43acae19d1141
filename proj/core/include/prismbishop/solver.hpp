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

#pragma once

#include "prismbishop/diagonals.hpp"
#include "prismbishop/placement.hpp"

namespace prismbishop {

// Exact independence computation.  A bishop covers exactly its square's
// two maximal diagonals, so an independent set of bishops is precisely a
// matching in the multigraph whose nodes are diagonals and whose links are
// squares.  Maximum matching therefore gives the exact independence number
// with a witness, at any board size.

/// Nodes are diagonal ids; one link per square.
struct DiagonalMultigraph {
    struct Link {
        int a = -1;
        int b = -1;
        SquareId square = -1;
    };
    int node_count = 0;
    std::vector<Link> links;
};

DiagonalMultigraph build_diagonal_multigraph(const DiagonalAtlas& atlas);

/// True iff no two placed bishops share a maximal diagonal.  Computed both
/// through the atlas incidence and through explicit move rays; throws
/// ConsistencyError if the two methods disagree (engine bug).
bool is_independent(const Board& board, const DiagonalAtlas& atlas, const Placement& placement);

struct SolveResult {
    int value = 0;
    bool oracle_fallback = false; // matching reduction unusable, oracle used
};

/// Exact independence number via maximum matching.  Falls back to the
/// brute-force oracle when some diagonal self-crosses (which breaks the
/// matching reduction).
SolveResult independence_number(const Board& board, const DiagonalAtlas& atlas);

/// An independent placement witnessing independence_number.
Placement max_placement(const Board& board, const DiagonalAtlas& atlas);

inline constexpr int kDefaultOracleCap = 60;

/// Exact maximum independent set on the square-conflict graph by branch
/// and bound, independent of the matching reduction.  Refuses boards with
/// more than square_cap squares.
int brute_force_oracle(const Board& board, const DiagonalAtlas& atlas,
                       int square_cap = kDefaultOracleCap);

} // namespace prismbishop
