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

#include "prismbishop/board.hpp"

namespace prismbishop {

// Closed forms for bishop independence on the n x n x m prism surface,
// keyed on the parities of k and n and on the residue r of m mod n.

enum class Parity { Odd, Even };
enum class RClass { Zero, Odd, EvenPositive };

/// Which closed-form branch applies to a board.
struct CaseTag {
    Parity k_parity = Parity::Odd;
    Parity n_parity = Parity::Odd;
    RClass r_class = RClass::Zero;

    auto operator<=>(const CaseTag&) const = default;
};

CaseTag case_tag(const BoardSpec& spec);
std::string describe(const CaseTag& tag);

/// Exact independence number.  Six branches; r = 0 with n even falls under
/// the "n and r even" branches (zero is even), which makes the cases a
/// partition.
int theorem_value(const BoardSpec& spec);

/// Diagonal-counting upper bound; met exactly except when n and r are both
/// even.
int lemma3_bound(const BoardSpec& spec);

/// Total number of maximal diagonals.
int diagonal_count_formula(const BoardSpec& spec);

} // namespace prismbishop
