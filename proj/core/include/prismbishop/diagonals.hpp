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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "prismbishop/board.hpp"

namespace prismbishop {

// Maximal diagonals of the prism surface.  Every square carries two
// diagonal slots (one per axis through its corners); tracing the diagonal
// motion partitions all slots into maximal diagonals: 12 open ones ending
// at the prism corners, the rest closed cycles.

enum class DiagonalKind { Open, Closed };

/// The two 45-degree chord directions across a cap, named for the cap
/// diagonal they run parallel to.  A Main chord connects ring positions
/// t and 2n - t, an Anti chord t and -t (mod 4n).
enum class ChordFamily { Main, Anti };

/// One pass of a diagonal across a cap: enters the boundary ring at
/// ring_in, leaves at ring_out.  offset is the chord's signed distance
/// from the parallel cap diagonal, in [-(n-1), n-1] and never 0.
struct CapVisit {
    FaceId cap = FaceId::CapLeft;
    int ring_in = 0;
    int ring_out = 0;
    ChordFamily family = ChordFamily::Main;
    int offset = 0;
};

struct MaximalDiagonal {
    int id = -1;
    DiagonalKind kind = DiagonalKind::Open;
    std::vector<SquareId> squares;     // trace order; cyclic when closed
    std::array<SquareId, 2> endpoints = {-1, -1}; // open diagonals only
    std::vector<CapVisit> visits;      // cap passes in trace order
    bool self_crossing = false;        // some square appears twice

    int length() const { return static_cast<int>(squares.size()); }
};

struct DiagonalAtlas {
    std::vector<MaximalDiagonal> diagonals;
    int open_count = 0;
    int closed_count = 0;

    // Per square: owning diagonal of the Main-axis slot and the Anti-axis
    // slot.  The two entries coincide exactly for self-crossing diagonals.
    std::vector<std::array<int, 2>> square_diagonals;
    std::vector<int> self_crossing_ids;

    int total() const { return static_cast<int>(diagonals.size()); }
    const std::array<int, 2>& diagonals_of(SquareId sq) const {
        return square_diagonals[static_cast<std::size_t>(sq)];
    }
};

/// Traces every maximal diagonal.  Open diagonals are discovered from the
/// 24 corner squares (each found twice and deduplicated), closed ones by
/// sweeping the remaining slots.  Throws StructuralError if the slot
/// partition is inconsistent.
DiagonalAtlas enumerate_diagonals(const Board& board);

/// Number of passes over each cap (CapLeft, CapRight counts).  Only
/// defined for closed diagonals; open ones are rejected.
std::pair<int, int> face_visit_profile(const DiagonalAtlas& atlas, int diagonal_id);

/// floor(total diagonals / 2): a bishop always covers exactly 2 diagonals.
/// Requires every square to lie on 2 distinct diagonals.
int upper_bound_from_atlas(const DiagonalAtlas& atlas);

// Closed diagonals fall into cycle sets: bundles of parallel tracks,
// numbered consecutively along a cap chord line.  The odd-numbered members
// form P, the even-numbered ones Q; for n and r both even a bishop placed
// anywhere covers some member of P, which is what sharpens the diagonal
// counting bound to the exact independence number.

enum class CycleSetKind { First, Second };

struct CycleSet {
    CycleSetKind kind = CycleSetKind::First;
    int cap_visits = 0;             // passes over each cap per circuit
    std::vector<int> members;       // ordered; position i+1 in the numbering
    std::vector<int> p_members;     // odd positions
    std::vector<int> q_members;     // even positions
    FaceId line_cap = FaceId::CapLeft;      // chord line used for ordering
    ChordFamily line_family = ChordFamily::Main;

    int size() const { return static_cast<int>(members.size()); }
};

/// Groups all closed diagonals into cycle sets and orders each set along
/// its chord line.  Throws StructuralError if the partition does not match
/// the expected set counts and sizes for the board's (k, r) class.
std::vector<CycleSet> cycle_sets(const Board& board, const DiagonalAtlas& atlas);

/// True iff every square lies on at least one P-member of some cycle set.
/// Only meaningful (and only accepted) when n and r are both even.
bool p_coverage_check(const Board& board, const DiagonalAtlas& atlas,
                      const std::vector<CycleSet>& sets);

/// One line per diagonal: id, kind, length, cap-visit profile.
std::string format_atlas_listing(const DiagonalAtlas& atlas);

} // namespace prismbishop
