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
#include "prismbishop/solver.hpp"

namespace prismbishop {

// The six explicit placement procedures, one per parity class of
// (k, n, m).  Each returns an independent placement of exactly the
// theorem_value size or throws ConstructionFault; nothing is repaired
// silently.

Placement construction_1(const Board& board, const DiagonalAtlas& atlas); // k odd,  n even, m even
Placement construction_2(const Board& board, const DiagonalAtlas& atlas); // k even, n even, m even
Placement construction_3(const Board& board, const DiagonalAtlas& atlas); // k odd,  n even, m odd
Placement construction_4(const Board& board, const DiagonalAtlas& atlas); // k even, n even, m odd
Placement construction_5(const Board& board, const DiagonalAtlas& atlas); // k odd,  n odd
Placement construction_6(const Board& board, const DiagonalAtlas& atlas); // k even, n odd

/// Dispatches to the construction whose preconditions the board meets.
/// n = 2 boards fall outside the procedures; they get a solver-extracted
/// witness flagged "small-n" instead.
Placement construct_placement(const Board& board, const DiagonalAtlas& atlas);

} // namespace prismbishop
