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

#include "prismbishop/placement.hpp"

#include <algorithm>
#include <sstream>

namespace prismbishop {

void Placement::normalize(const Board& board) {
    for (const Square& sq : squares)
        if (!board.contains(sq))
            throw Error("placement square outside the board");
    std::sort(squares.begin(), squares.end());
    if (std::adjacent_find(squares.begin(), squares.end()) != squares.end())
        throw Error("placement holds duplicate squares");
}

std::string write_placement(const Placement& placement) {
    std::ostringstream out;
    out << "prism-placement v1\n";
    out << "n " << placement.spec.n << '\n';
    out << "m " << placement.spec.m << '\n';
    out << "count " << placement.size() << '\n';
    if (!placement.origin.empty())
        out << "origin " << placement.origin << '\n';
    for (const std::string& note : placement.notes)
        out << "note " << note << '\n';
    for (const Square& sq : placement.squares)
        out << "square " << face_label(sq.face) << ' ' << sq.row << ' ' << sq.col << '\n';
    return out.str();
}

Placement parse_placement(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "prism-placement v1")
        throw Error("placement file lacks the 'prism-placement v1' header");

    Placement placement;
    int n = -1;
    int m = -1;
    int count = -1;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            fields >> n;
        } else if (tag == "m") {
            fields >> m;
        } else if (tag == "count") {
            fields >> count;
        } else if (tag == "origin") {
            std::string rest;
            std::getline(fields, rest);
            placement.origin = rest.empty() ? rest : rest.substr(1);
        } else if (tag == "note") {
            std::string rest;
            std::getline(fields, rest);
            placement.notes.push_back(rest.empty() ? rest : rest.substr(1));
        } else if (tag == "square") {
            std::string label;
            Square sq{};
            fields >> label >> sq.row >> sq.col;
            auto face = face_from_label(label);
            if (!face || fields.fail())
                throw Error("malformed square line: " + line);
            sq.face = *face;
            placement.squares.push_back(sq);
        } else {
            throw Error("unknown placement field: " + tag);
        }
        if (fields.fail())
            throw Error("malformed placement line: " + line);
    }
    if (n < 0 || m < 0 || count < 0)
        throw Error("placement file misses n, m or count");
    placement.spec = BoardSpec::make(n, m);
    if (count != placement.size())
        throw Error("placement count disagrees with the square list");
    return placement;
}

} // namespace prismbishop
