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

#include "prismbishop/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace prismbishop {

namespace {

// Drawing plan (rows grow downward, cols rightward):
//   cap_left  at rows 0..n-1, cols 0..n-1, mirrored so its glued-to-Lat0
//             edge touches the band
//   band      at rows 0..4n-1, cols n..n+m-1 (Lat0 on top, then Lat1..3)
//   cap_right at rows 0..n-1, cols n+m..n+2m... n+m+n-1
//
// Glue labels: 1/2/3 pair cap_left's free edges with the left edges of
// Lat1/Lat2/Lat3; 4/5/6 the same for cap_right; 7 pairs the band's top and
// bottom edges (the cyclic wrap).

struct Cell {
    int row = 0;
    int col = 0;
};

Cell drawing_cell(const Board& board, const Square& sq) {
    const int n = board.n();
    switch (sq.face) {
    case FaceId::CapLeft:
        return {sq.row, n - 1 - sq.col};
    case FaceId::CapRight:
        return {sq.row, n + board.m() + sq.col};
    default:
        return {(static_cast<int>(sq.face) - 2) * n + sq.row, n + sq.col};
    }
}

bool drawn(const Board& board, int row, int col, Square& out) {
    const int n = board.n();
    const int m = board.m();
    if (col >= n && col < n + m) {
        if (row < 0 || row >= 4 * n)
            return false;
        out = {static_cast<FaceId>(2 + row / n), row % n, col - n};
        return true;
    }
    if (row < 0 || row >= n)
        return false;
    if (col >= 0 && col < n) {
        out = {FaceId::CapLeft, row, n - 1 - col};
        return true;
    }
    if (col >= n + m && col < n + m + n) {
        out = {FaceId::CapRight, row, col - n - m};
        return true;
    }
    return false;
}

} // namespace

std::string render_net_text(const Board& board, const Placement& placement) {
    const int n = board.n();
    const int m = board.m();
    std::set<Square> bishops(placement.squares.begin(), placement.squares.end());

    std::ostringstream out;
    out << "net " << n << "x" << n << "x" << m << ", " << placement.size() << " bishops\n";
    out << std::string(static_cast<std::size_t>(n), ' ') << '7'
        << std::string(static_cast<std::size_t>(m - 1), '-') << '\n';
    for (int row = 0; row < 4 * n; ++row) {
        std::string line;
        for (int col = 0; col < 2 * n + m; ++col) {
            Square sq{};
            if (!drawn(board, row, col, sq)) {
                // Margin columns carry the glue label of the band edge.
                const bool mid_row = row >= n && row % n == n / 2;
                if (col == n - 1 && mid_row)
                    line += static_cast<char>('0' + row / n);
                else if (col == n + m && mid_row)
                    line += static_cast<char>('0' + 3 + row / n);
                else
                    line += ' ';
                continue;
            }
            line += bishops.count(sq) ? 'B' : '.';
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << '\n';
    }
    out << std::string(static_cast<std::size_t>(n), ' ') << '7'
        << std::string(static_cast<std::size_t>(m - 1), '-') << '\n';
    out << "glue: 1 cap_left~lat1  2 cap_left~lat2  3 cap_left~lat3  "
        << "4 cap_right~lat1  5 cap_right~lat2  6 cap_right~lat3  7 lat3~lat0\n";
    return out.str();
}

std::string render_net_svg(const Board& board, const Placement& placement) {
    const int n = board.n();
    const int m = board.m();
    const int unit = 20;
    const int margin = 30;
    const int width = (2 * n + m) * unit + 2 * margin;
    const int height = 4 * n * unit + 2 * margin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    auto emit_face = [&](FaceId face) {
        const int rows = board.face_rows(face);
        const int cols = board.face_cols(face);
        for (int row = 0; row < rows; ++row) {
            for (int col = 0; col < cols; ++col) {
                const Cell c = drawing_cell(board, {face, row, col});
                const bool dark = (row + col) % 2 == 1;
                out << "  <rect x=\"" << margin + c.col * unit << "\" y=\""
                    << margin + c.row * unit << "\" width=\"" << unit << "\" height=\"" << unit
                    << "\" fill=\"" << (dark ? "#c8c8c8" : "#f2f2f2")
                    << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
            }
        }
        // Face outline.
        const Cell origin = drawing_cell(board, {face, 0, face == FaceId::CapLeft ? cols - 1 : 0});
        out << "  <rect x=\"" << margin + origin.col * unit << "\" y=\""
            << margin + origin.row * unit << "\" width=\"" << cols * unit << "\" height=\""
            << rows * unit << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    };
    for (int f = 0; f < 6; ++f)
        emit_face(static_cast<FaceId>(f));

    // Glue labels along the identified edges.
    auto label = [&](int row, int col, char text) {
        out << "  <text x=\"" << margin + col * unit << "\" y=\"" << margin + row * unit
            << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#444\">" << text << "</text>\n";
    };
    for (int i = 1; i < 4; ++i) {
        label(i * n + n / 2, n - 1, static_cast<char>('0' + i));          // cap_left pairs
        label(i * n + n / 2, n + m + 1, static_cast<char>('0' + 3 + i)); // cap_right pairs
    }
    label(0, n + m / 2, '7');
    label(4 * n + 1, n + m / 2, '7');
    // Matching labels on the free cap edges: bottom, outer side, top.
    label(n + 1, n / 2, '1');
    label(n / 2, -1, '2');
    label(-1, n / 2, '3');
    label(n + 1, n + m + n / 2, '4');
    label(n / 2, 2 * n + m + 1, '5');
    label(-1, n + m + n / 2, '6');

    for (const Square& sq : placement.squares) {
        const Cell c = drawing_cell(board, sq);
        out << "  <circle cx=\"" << margin + c.col * unit + unit / 2 << "\" cy=\""
            << margin + c.row * unit + unit / 2 << "\" r=\"" << unit * 2 / 5
            << "\" fill=\"#14532d\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_net(const Board& board, const Placement& placement, RenderFormat format) {
    return format == RenderFormat::Text ? render_net_text(board, placement)
                                        : render_net_svg(board, placement);
}

} // namespace prismbishop
