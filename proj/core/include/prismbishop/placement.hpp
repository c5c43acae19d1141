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

#include <string>
#include <vector>

#include "prismbishop/board.hpp"

namespace prismbishop {

/// A set of squares holding bishops.
struct Placement {
    BoardSpec spec;
    std::vector<Square> squares; // kept sorted and duplicate-free
    std::string origin;          // e.g. "construction-3", "solver-witness"
    std::vector<std::string> notes;

    int size() const { return static_cast<int>(squares.size()); }

    /// Sorts, verifies board membership and rejects duplicates.
    void normalize(const Board& board);
};

// Plain-text placement record, one field per line:
//
//   prism-placement v1
//   n 6
//   m 8
//   count 10
//   origin construction-1
//   note <free text>            (optional, repeatable)
//   square <face> <row> <col>   (one per bishop)
//
// Face labels are cap_left, cap_right, lat0..lat3.

std::string write_placement(const Placement& placement);

/// Parses the format above.  Throws Error on malformed input or when the
/// square list disagrees with the count field.
Placement parse_placement(const std::string& text);

} // namespace prismbishop
