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

#include "prismbishop/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "prismbishop/formulas.hpp"

namespace prismbishop {

namespace {

// Side indices, for readability of the walks below.
constexpr int kRowMinus = 0;
constexpr int kColMinus = 1;
constexpr int kColPlus = 2;
constexpr int kRowPlus = 3;

SquareId cell(const Board& b, FaceId face, int row, int col) {
    return b.id_of(Square{face, row, col});
}

/// The closed rook line through `start` that leaves it via `exit_side`.
/// Element 0 is `start`; signed offsets index it cyclically.
class Loop {
public:
    Loop(const Board& b, SquareId start, int exit_side) {
        const RookStep begin{start, opposite_side(exit_side)};
        squares_.push_back(start);
        for (RookStep cur = b.rook_step(begin); cur != begin; cur = b.rook_step(cur))
            squares_.push_back(cur.square);
    }

    int length() const { return static_cast<int>(squares_.size()); }

    SquareId at(int offset) const {
        const int len = length();
        return squares_[static_cast<std::size_t>(((offset % len) + len) % len)];
    }

    const std::vector<SquareId>& squares() const { return squares_; }

private:
    std::vector<SquareId> squares_;
};

bool is_open_intersection(const DiagonalAtlas& atlas, SquareId sq) {
    const auto& pair = atlas.diagonals_of(sq);
    return pair[0] != pair[1] &&
           atlas.diagonals[static_cast<std::size_t>(pair[0])].kind == DiagonalKind::Open &&
           atlas.diagonals[static_cast<std::size_t>(pair[1])].kind == DiagonalKind::Open;
}

/// The nearest open-intersection cell on each side of the loop's origin.
/// first = negative offset, second = positive offset.
std::pair<int, int> flanking_intersections(const DiagonalAtlas& atlas, const Loop& loop) {
    const int len = loop.length();
    int positive = -1;
    int negative = -1;
    for (int d = 1; d <= len / 2; ++d) {
        if (positive < 0 && is_open_intersection(atlas, loop.at(d)))
            positive = d;
        if (negative < 0 && is_open_intersection(atlas, loop.at(-d)))
            negative = d;
        if (positive > 0 && negative > 0)
            break;
    }
    if (positive < 0 || negative < 0)
        throw ConstructionFault("no open-diagonal intersection cells flank the line center");
    return {-negative, positive};
}

/// The 2x2 block of cells on a cap where two open diagonals meet.
struct CapIntersections {
    std::array<int, 2> rows; // ascending
    std::array<int, 2> cols; // ascending
};

CapIntersections cap_open_intersections(const Board& b, const DiagonalAtlas& atlas, FaceId cap) {
    std::vector<Square> cells;
    const int n = b.n();
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col)
            if (is_open_intersection(atlas, cell(b, cap, row, col)))
                cells.push_back({cap, row, col});
    if (cells.size() != 4)
        throw ConstructionFault("expected exactly 4 open-intersection cells on the cap, found " +
                                std::to_string(cells.size()));
    std::vector<int> rows;
    std::vector<int> cols;
    for (const Square& sq : cells) {
        rows.push_back(sq.row);
        cols.push_back(sq.col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (rows.size() != 2 || cols.size() != 2)
        throw ConstructionFault("open-intersection cells do not form a 2x2 block");
    return {{rows[0], rows[1]}, {cols[0], cols[1]}};
}

/// `count` consecutive cells of a lateral-face row, centered on the row.
std::vector<SquareId> centered_row_cells(const Board& b, FaceId lat, int row, int count) {
    std::vector<SquareId> out;
    if (count <= 0)
        return out;
    const int m = b.m();
    if ((m % 2 == 1) != (count % 2 == 1))
        throw ConstructionFault("centered run parity does not match the row length");
    const int first = (m - count) / 2;
    for (int j = 0; j < count; ++j)
        out.push_back(cell(b, lat, row, first + j));
    return out;
}

struct Builder {
    const Board& board;
    const DiagonalAtlas& atlas;
    std::vector<SquareId> squares;

    void add(SquareId sq) { squares.push_back(sq); }
    void add(const Loop& loop, int offset) { squares.push_back(loop.at(offset)); }
    void add_range(const Loop& loop, int from, int to) { // inclusive, either direction
        const int step = from <= to ? 1 : -1;
        for (int d = from;; d += step) {
            squares.push_back(loop.at(d));
            if (d == to)
                break;
        }
    }

    Placement finish(std::string origin, int target) {
        Placement p;
        p.spec = board.spec();
        p.origin = std::move(origin);
        for (SquareId sq : squares)
            p.squares.push_back(board.square_at(sq));
        std::sort(p.squares.begin(), p.squares.end());
        if (std::adjacent_find(p.squares.begin(), p.squares.end()) != p.squares.end())
            throw ConstructionFault(p.origin + ": placement repeats a square");
        if (p.size() != target)
            throw ConstructionFault(p.origin + ": placed " + std::to_string(p.size()) +
                                    " bishops, expected " + std::to_string(target));
        if (!is_independent(board, atlas, p)) {
            // Name an offending diagonal for the report.
            std::map<int, SquareId> seen;
            for (const Square& sq : p.squares) {
                const SquareId id = board.id_of(sq);
                for (int diag : atlas.diagonals_of(id)) {
                    auto [it, fresh] = seen.try_emplace(diag, id);
                    if (!fresh && it->second != id)
                        throw ConstructionFault(p.origin + ": squares " +
                                                std::to_string(it->second) + " and " +
                                                std::to_string(id) + " share maximal diagonal " +
                                                std::to_string(diag));
                }
            }
            throw ConstructionFault(p.origin + ": placement is not independent");
        }
        return p;
    }
};

void require(bool ok, const char* what) {
    if (!ok)
        throw Error(what);
}

} // namespace

Placement construction_1(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    require(s.k % 2 == 1 && s.n % 2 == 0 && s.m % 2 == 0,
            "construction 1 requires k odd, n and m even");
    const int n = s.n;
    const int r = s.r;

    // n bishops rightward from the middle-row center, n - r leftward after
    // skipping r cells.
    Builder out{board, atlas, {}};
    const Loop row(board, cell(board, FaceId::CapLeft, n / 2, n / 2), kColPlus);
    out.add_range(row, 0, n - 1);
    out.add_range(row, -(r + 1), -n);
    return out.finish("construction-1", theorem_value(s));
}

Placement construction_2(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    require(s.k % 2 == 0 && s.n % 2 == 0 && s.m % 2 == 0,
            "construction 2 requires k even, n and m even");
    const int n = s.n;
    const int r = s.r;

    Builder out{board, atlas, {}};
    const Loop row(board, cell(board, FaceId::CapLeft, n / 2, n / 2), kColPlus);
    out.add_range(row, 0, n - 1);
    if (r > 0)
        out.add_range(row, -1, -r);
    return out.finish("construction-2", theorem_value(s));
}

namespace {

// Shared body of constructions 3 and 4: two runs up and down a lateral
// column plus two bishops per cap in the intersection column nearest the
// chosen face.
void column_and_caps(Builder& out, int column, int run_length) {
    const Board& board = out.board;
    const int n = board.n();

    const Loop col_up(board, cell(board, FaceId::Lat0, n / 2 - 1, column), kRowMinus);
    out.add(col_up, 0);
    if (run_length > 1)
        out.add_range(col_up, 1, run_length - 1);
    const Loop col_down(board, cell(board, FaceId::Lat0, n / 2, column), kRowPlus);
    out.add(col_down, 0);
    if (run_length > 1)
        out.add_range(col_down, 1, run_length - 1);

    for (FaceId cap : {FaceId::CapLeft, FaceId::CapRight}) {
        const CapIntersections hits = cap_open_intersections(board, out.atlas, cap);
        const int near_col = hits.cols[0]; // Lat0 touches the caps at col 0
        out.add(cell(board, cap, hits.rows[0], near_col));
        out.add(cell(board, cap, hits.rows[1], near_col));
    }
}

} // namespace

Placement construction_3(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    require(s.k % 2 == 1 && s.n % 2 == 0 && s.m % 2 == 1,
            "construction 3 requires k odd, n even, m odd");
    const int target = theorem_value(s); // 2n + 3 - r, always even here

    Builder out{board, atlas, {}};
    column_and_caps(out, (s.n + s.r + 1) / 2 - 1, target / 2 - 2);
    return out.finish("construction-3", target);
}

Placement construction_4(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    require(s.k % 2 == 0 && s.n % 2 == 0 && s.m % 2 == 1,
            "construction 4 requires k even, n even, m odd");
    const int r = s.r;
    const int target = theorem_value(s); // n + 3 + r

    Builder out{board, atlas, {}};
    column_and_caps(out, (2 * s.n + s.r + 1) / 2 - 1, target / 2 - r - 1);

    // 2r - 2 more on one cap: fill the near intersection column between the
    // two bishops already there, and mirror those rows into the far column.
    const CapIntersections hits = cap_open_intersections(board, atlas, FaceId::CapLeft);
    const int between = hits.rows[1] - hits.rows[0] - 1;
    if (between != r - 1)
        throw ConstructionFault("construction-4: " + std::to_string(between) +
                                " cells between the intersection bishops, expected " +
                                std::to_string(r - 1));
    for (int row = hits.rows[0] + 1; row < hits.rows[1]; ++row) {
        out.add(cell(board, FaceId::CapLeft, row, hits.cols[0]));
        out.add(cell(board, FaceId::CapLeft, row, hits.cols[1]));
    }
    return out.finish("construction-4", target);
}

Placement construction_5(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    require(s.k % 2 == 1 && s.n % 2 == 1, "construction 5 requires k and n odd");
    const int n = s.n;
    const int r = s.r;
    const int c = (n - 1) / 2;
    const int target = theorem_value(s); // 2n + 3 - r, or 2n + 4 when r = 0

    Builder out{board, atlas, {}};

    // r - 1 bishops around the center of the pivotal row.
    for (SquareId sq : centered_row_cells(board, FaceId::Lat0, c, r - 1))
        out.add(sq);

    // First cap: center cell, the two intersection cells on the pivotal
    // line, and runs extending outward from those.
    const Loop pivot(board, cell(board, FaceId::CapLeft, c, c), kColPlus);
    out.add(pivot, 0);
    auto [left, right] = flanking_intersections(atlas, pivot);
    out.add(pivot, left);
    out.add(pivot, right);
    const int run = (r > 0) ? n - r - 1 : n - 1;
    if (run > 0) {
        out.add_range(pivot, left - 1, left - run);
        out.add_range(pivot, right + 1, right + run);
    }

    // Second cap: center cell plus the intersection pair on the middle
    // column, perpendicular to the pivotal row.
    const Loop column(board, cell(board, FaceId::CapRight, c, c), kRowPlus);
    out.add(column, 0);
    auto [down, up] = flanking_intersections(atlas, column);
    out.add(column, down);
    out.add(column, up);

    return out.finish("construction-5", target);
}

Placement construction_6(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    require(s.k % 2 == 0 && s.n % 2 == 1, "construction 6 requires k even, n odd");
    const int n = s.n;
    const int r = s.r;
    const int c = (n - 1) / 2;
    const int target = theorem_value(s); // n + 3 + r, or n + 5 when r = 0

    Builder out{board, atlas, {}};

    // n - r - 1 bishops around the center of the pivotal row.
    const int band = (r > 0) ? n - r - 1 : n - 1;
    for (SquareId sq : centered_row_cells(board, FaceId::Lat0, c, band))
        out.add(sq);

    // Each cap: center cell plus the intersection pair on its middle row
    // (both rows lie on the pivotal line).
    std::pair<int, int> first_pair{0, 0};
    const Loop left_line(board, cell(board, FaceId::CapLeft, c, c), kColPlus);
    {
        out.add(left_line, 0);
        first_pair = flanking_intersections(atlas, left_line);
        out.add(left_line, first_pair.first);
        out.add(left_line, first_pair.second);
    }
    {
        const Loop right_line(board, cell(board, FaceId::CapRight, c, c), kColPlus);
        out.add(right_line, 0);
        auto [lo, hi] = flanking_intersections(atlas, right_line);
        out.add(right_line, lo);
        out.add(right_line, hi);
    }

    // 2r - 2 more: fill every empty cell between one intersection pair.
    if (r > 0) {
        const int empty = (first_pair.second - first_pair.first - 1) - 1; // center is taken
        if (empty != 2 * r - 2)
            throw ConstructionFault("construction-6: " + std::to_string(empty) +
                                    " empty cells between the intersection pair, expected " +
                                    std::to_string(2 * r - 2));
        for (int d = first_pair.first + 1; d < first_pair.second; ++d)
            if (d != 0)
                out.add(left_line, d);
    }

    return out.finish("construction-6", target);
}

Placement construct_placement(const Board& board, const DiagonalAtlas& atlas) {
    const BoardSpec& s = board.spec();
    if (s.n == 2) {
        // The procedures reference face centers that degenerate at n = 2;
        // fall back to an exact solver witness.
        Placement p = max_placement(board, atlas);
        p.notes.push_back("small-n: validated by oracle only");
        return p;
    }
    const bool k_odd = s.k % 2 == 1;
    if (s.n % 2 == 1)
        return k_odd ? construction_5(board, atlas) : construction_6(board, atlas);
    if (s.m % 2 == 0)
        return k_odd ? construction_1(board, atlas) : construction_2(board, atlas);
    return k_odd ? construction_3(board, atlas) : construction_4(board, atlas);
}

} // namespace prismbishop
