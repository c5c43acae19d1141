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

#include "prismbishop/placement.hpp"

namespace prismbishop {

// Net diagrams: the four lateral faces drawn as one vertical band, the
// caps attached beside the Lat0 rows, glue labels 1..7 marking the edge
// pairs that are identified but not adjacent in the drawing.

/// Fixed-width text diagram; one B per bishop.
std::string render_net_text(const Board& board, const Placement& placement);

/// SVG 1.1 document; one circle per bishop.
std::string render_net_svg(const Board& board, const Placement& placement);

enum class RenderFormat { Text, Svg };

std::string render_net(const Board& board, const Placement& placement, RenderFormat format);

} // namespace prismbishop
