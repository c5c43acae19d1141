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

#include "prismbishop/board.hpp"

#include <algorithm>
#include <unordered_map>

namespace prismbishop {

namespace {

constexpr std::array<std::string_view, 6> kFaceLabels = {
    "cap_left", "cap_right", "lat0", "lat1", "lat2", "lat3",
};

// Shared-vertex count between two squares; 2 means edge neighbors, 1 means
// diagonal neighbors.
int shared_vertices(const std::array<VertexId, 4>& a, const std::array<VertexId, 4>& b) {
    int count = 0;
    for (VertexId va : a)
        for (VertexId vb : b)
            if (va == vb)
                ++count;
    return count;
}

} // namespace

std::string_view face_label(FaceId f) { return kFaceLabels[static_cast<std::size_t>(f)]; }

std::optional<FaceId> face_from_label(std::string_view label) {
    for (std::size_t i = 0; i < kFaceLabels.size(); ++i)
        if (kFaceLabels[i] == label)
            return static_cast<FaceId>(i);
    return std::nullopt;
}

BoardSpec BoardSpec::make(int n, int m) {
    if (n < 2)
        throw DimensionError("board requires n >= 2, got n = " + std::to_string(n));
    if (m < n)
        throw DimensionError("board requires n <= m, got n = " + std::to_string(n) +
                             ", m = " + std::to_string(m));
    BoardSpec s;
    s.n = n;
    s.m = m;
    s.k = m / n;
    s.r = m % n;
    return s;
}

std::pair<int, int> Board::perimeter_point(int t) const {
    const int n = spec_.n;
    t %= 4 * n;
    if (t < 0)
        t += 4 * n;
    if (t <= n)
        return {t, 0};
    if (t <= 2 * n)
        return {n, t - n};
    if (t <= 3 * n)
        return {3 * n - t, n};
    return {0, 4 * n - t};
}

GridPoint Board::face_point(FaceId f, int grid_row, int grid_col) const {
    const int m = spec_.m;
    switch (f) {
    case FaceId::CapLeft:
        return {0, grid_row, grid_col};
    case FaceId::CapRight:
        return {m, grid_row, grid_col};
    default: {
        const int band_row = (static_cast<int>(f) - 2) * spec_.n + grid_row;
        auto [y, z] = perimeter_point(band_row);
        return {grid_col, y, z};
    }
    }
}

Board::Board(int n, int m) : spec_(BoardSpec::make(n, m)) {
    int offset = 0;
    for (int f = 0; f < 6; ++f) {
        face_offset_[static_cast<std::size_t>(f)] = offset;
        const FaceId face = static_cast<FaceId>(f);
        offset += face_rows(face) * face_cols(face);
    }
    square_corners_.resize(static_cast<std::size_t>(offset));
    build_vertices();
    build_edges();
    validate();
}

SquareId Board::id_of(const Square& sq) const {
    if (!contains(sq))
        throw DimensionError("square outside board");
    return face_offset_[static_cast<std::size_t>(sq.face)] + sq.row * face_cols(sq.face) + sq.col;
}

bool Board::contains(const Square& sq) const {
    return sq.row >= 0 && sq.row < face_rows(sq.face) && sq.col >= 0 &&
           sq.col < face_cols(sq.face);
}

Square Board::square_at(SquareId id) const {
    if (id < 0 || id >= square_count())
        throw DimensionError("square id out of range");
    for (int f = 5; f >= 0; --f) {
        const int off = face_offset_[static_cast<std::size_t>(f)];
        if (id >= off) {
            const FaceId face = static_cast<FaceId>(f);
            const int local = id - off;
            return {face, local / face_cols(face), local % face_cols(face)};
        }
    }
    throw DimensionError("square id out of range");
}

void Board::build_vertices() {
    // Grid points keyed by packed 3D coordinates; identification is simply
    // coordinate equality.
    std::unordered_map<std::int64_t, VertexId> point_ids;
    auto key = [](const GridPoint& p) {
        return (static_cast<std::int64_t>(p.x) << 40) |
               (static_cast<std::int64_t>(p.y) << 20) | static_cast<std::int64_t>(p.z);
    };
    auto intern = [&](const GridPoint& p) -> VertexId {
        auto [it, fresh] = point_ids.try_emplace(key(p), static_cast<VertexId>(vertex_points_.size()));
        if (fresh)
            vertex_points_.push_back(p);
        return it->second;
    };

    for (int f = 0; f < 6; ++f) {
        const FaceId face = static_cast<FaceId>(f);
        const int rows = face_rows(face);
        const int cols = face_cols(face);
        for (int row = 0; row < rows; ++row) {
            for (int col = 0; col < cols; ++col) {
                const SquareId sq = face_offset_[static_cast<std::size_t>(f)] + row * cols + col;
                auto& corners = square_corners_[static_cast<std::size_t>(sq)];
                corners[0] = intern(face_point(face, row, col));
                corners[1] = intern(face_point(face, row, col + 1));
                corners[2] = intern(face_point(face, row + 1, col));
                corners[3] = intern(face_point(face, row + 1, col + 1));
            }
        }
    }

    vertex_squares_.assign(vertex_points_.size(), {-1, -1, -1, -1});
    vertex_square_count_.assign(vertex_points_.size(), 0);
    for (SquareId sq = 0; sq < square_count(); ++sq) {
        for (VertexId v : square_corners_[static_cast<std::size_t>(sq)]) {
            auto& count = vertex_square_count_[static_cast<std::size_t>(v)];
            if (count >= 4)
                throw StructuralError("grid point incident to more than 4 squares");
            vertex_squares_[static_cast<std::size_t>(v)][count++] = sq;
        }
    }
}

void Board::build_edges() {
    struct EdgeSlot {
        SquareId square = -1;
        std::uint8_t side = 0;
    };
    std::unordered_map<std::int64_t, EdgeSlot> half_edges;
    edge_neighbors_.assign(square_corners_.size(), {-1, -1, -1, -1});
    edge_neighbor_side_.assign(square_corners_.size(), {0, 0, 0, 0});
    edge_count_ = 0;

    for (SquareId sq = 0; sq < square_count(); ++sq) {
        const auto& corners = square_corners_[static_cast<std::size_t>(sq)];
        for (int side = 0; side < 4; ++side) {
            VertexId a = corners[static_cast<std::size_t>(kSideCorners[static_cast<std::size_t>(side)][0])];
            VertexId b = corners[static_cast<std::size_t>(kSideCorners[static_cast<std::size_t>(side)][1])];
            if (a > b)
                std::swap(a, b);
            const std::int64_t key = (static_cast<std::int64_t>(a) << 32) | static_cast<std::int64_t>(b);
            auto it = half_edges.find(key);
            if (it == half_edges.end()) {
                half_edges.emplace(key, EdgeSlot{sq, static_cast<std::uint8_t>(side)});
                ++edge_count_;
            } else {
                const EdgeSlot other = it->second;
                if (other.square < 0)
                    throw StructuralError("edge shared by more than 2 squares");
                edge_neighbors_[static_cast<std::size_t>(sq)][static_cast<std::size_t>(side)] = other.square;
                edge_neighbors_[static_cast<std::size_t>(other.square)][other.side] = sq;
                edge_neighbor_side_[static_cast<std::size_t>(sq)][static_cast<std::size_t>(side)] = other.side;
                edge_neighbor_side_[static_cast<std::size_t>(other.square)][other.side] =
                    static_cast<std::uint8_t>(side);
                it->second.square = -1;
            }
        }
    }

    for (const auto& [key, slot] : half_edges)
        if (slot.square >= 0)
            throw StructuralError("unmatched edge: surface is not closed");
}

void Board::validate() const {
    const int n = spec_.n;
    const int m = spec_.m;
    if (square_count() != 2 * n * n + 4 * n * m)
        throw StructuralError("square count mismatch");

    int trivalent = 0;
    for (VertexId v = 0; v < vertex_count(); ++v) {
        const int deg = vertex_degree(v);
        if (deg != 3 && deg != 4)
            throw StructuralError("grid point with degree outside {3, 4}");
        if (deg == 3)
            ++trivalent;
    }
    if (trivalent != 8)
        throw StructuralError("expected exactly 8 trivalent grid points");

    // Closed orientable surface of a convex solid: Euler characteristic 2.
    if (vertex_count() - edge_count_ + square_count() != 2)
        throw StructuralError("Euler characteristic is not 2");
}

std::optional<int> Board::cuboid_corner_of(SquareId sq) const {
    const auto& corners = square_corners_[static_cast<std::size_t>(sq)];
    for (int c = 0; c < 4; ++c)
        if (vertex_degree(corners[static_cast<std::size_t>(c)]) == 3)
            return c;
    return std::nullopt;
}

std::vector<SquareId> Board::diagonal_neighbors(SquareId sq) const {
    std::vector<SquareId> result;
    result.reserve(4);
    const auto& corners = square_corners_[static_cast<std::size_t>(sq)];
    for (int c = 0; c < 4; ++c) {
        const VertexId v = corners[static_cast<std::size_t>(c)];
        for (SquareId other : squares_at_vertex(v)) {
            if (other == sq)
                continue;
            if (shared_vertices(corners, square_corners_[static_cast<std::size_t>(other)]) == 1)
                result.push_back(other);
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::pair<std::vector<SquareId>, std::vector<SquareId>> Board::neighbors(SquareId sq) const {
    std::vector<SquareId> edge(edge_neighbors_[static_cast<std::size_t>(sq)].begin(),
                               edge_neighbors_[static_cast<std::size_t>(sq)].end());
    std::sort(edge.begin(), edge.end());
    return {std::move(edge), diagonal_neighbors(sq)};
}

std::optional<DiagStep> Board::diagonal_step(const DiagStep& step) const {
    const auto& corners = square_corners_[static_cast<std::size_t>(step.square)];
    const VertexId exit = corners[static_cast<std::size_t>(opposite_corner(step.entry_corner))];
    if (vertex_degree(exit) == 3)
        return std::nullopt;

    SquareId next = -1;
    for (SquareId other : squares_at_vertex(exit)) {
        if (other == step.square)
            continue;
        if (shared_vertices(corners, square_corners_[static_cast<std::size_t>(other)]) == 1) {
            if (next >= 0)
                throw StructuralError("ambiguous diagonal continuation");
            next = other;
        }
    }
    if (next < 0)
        throw StructuralError("missing diagonal continuation at 4-valent vertex");

    const auto& next_corners = square_corners_[static_cast<std::size_t>(next)];
    for (int c = 0; c < 4; ++c)
        if (next_corners[static_cast<std::size_t>(c)] == exit)
            return DiagStep{next, c};
    throw StructuralError("diagonal continuation does not touch exit vertex");
}

RookStep Board::rook_step(const RookStep& step) const {
    const int exit = opposite_side(step.entry_side);
    const SquareId next = edge_neighbors_[static_cast<std::size_t>(step.square)][static_cast<std::size_t>(exit)];
    const int entry = edge_neighbor_side_[static_cast<std::size_t>(step.square)][static_cast<std::size_t>(exit)];
    return RookStep{next, entry};
}

std::optional<RingPosition> Board::ring_position(VertexId v) const {
    const GridPoint& p = point_of(v);
    const int n = spec_.n;
    FaceId cap;
    if (p.x == 0)
        cap = FaceId::CapLeft;
    else if (p.x == spec_.m)
        cap = FaceId::CapRight;
    else
        return std::nullopt;
    const bool on_ring = p.y == 0 || p.y == n || p.z == 0 || p.z == n;
    if (!on_ring)
        return std::nullopt;
    int t;
    if (p.z == 0)
        t = p.y;
    else if (p.y == n)
        t = n + p.z;
    else if (p.z == n)
        t = 3 * n - p.y;
    else
        t = (4 * n - p.z) % (4 * n);
    return RingPosition{cap, t};
}

} // namespace prismbishop
