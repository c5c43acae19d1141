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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "prismbishop/errors.hpp"

namespace prismbishop {

// The surface of an n x n x m square prism, cut into unit squares.
//
// The model embeds every grid point into integer 3D coordinates on the
// boundary of the box [0,m] x [0,n] x [0,n] (x along the prism axis).  Two
// net points are the same surface point exactly when their 3D coordinates
// coincide, so the edge identification is involutive by construction and
// needs no glue table.  Face addressing follows the canonical net: the four
// lateral faces form one cyclic band of 4n rows x m columns (row index mod
// 4n), the caps attach to the band's end columns.

/// Face identifiers.  CapLeft sits at x = 0, CapRight at x = m.  Lat i
/// occupies band rows [i*n, (i+1)*n).
enum class FaceId : std::uint8_t {
    CapLeft = 0,
    CapRight = 1,
    Lat0 = 2,
    Lat1 = 3,
    Lat2 = 4,
    Lat3 = 5,
};

constexpr bool is_cap(FaceId f) {
    return f == FaceId::CapLeft || f == FaceId::CapRight;
}

std::string_view face_label(FaceId f);
std::optional<FaceId> face_from_label(std::string_view label);

/// A unit cell addressed by face and 0-based (row, col) within the face.
struct Square {
    FaceId face;
    int row;
    int col;

    auto operator<=>(const Square&) const = default;
};

/// Board dimensions with the derived division m = k*n + r, 0 <= r < n.
struct BoardSpec {
    int n = 0;
    int m = 0;
    int k = 0;
    int r = 0;

    /// Validates 2 <= n <= m and fills in k, r.
    static BoardSpec make(int n, int m);

    auto operator<=>(const BoardSpec&) const = default;
};

using SquareId = std::int32_t;
using VertexId = std::int32_t;

/// A lattice point on the box surface.
struct GridPoint {
    int x = 0;
    int y = 0;
    int z = 0;

    auto operator<=>(const GridPoint&) const = default;
};

// Square corners are numbered 0=(+0,+0), 1=(+0,+1), 2=(+1,+0), 3=(+1,+1)
// in face-local (row, col) offsets; the corner opposite c is 3 - c.
// Sides are 0=row-, 1=col-, 2=col+, 3=row+; the side opposite s is 3 - s.

constexpr int opposite_corner(int corner) { return 3 - corner; }
constexpr int opposite_side(int side) { return 3 - side; }

/// Corner pair delimiting each side, in corner-index terms.
constexpr std::array<std::array<int, 2>, 4> kSideCorners = {{
    {0, 1}, // row-
    {0, 2}, // col-
    {1, 3}, // col+
    {2, 3}, // row+
}};

/// One step of diagonal motion: the current square and the corner the
/// diagonal entered through.  The exit corner is the opposite one.
struct DiagStep {
    SquareId square = -1;
    int entry_corner = 0;

    auto operator<=>(const DiagStep&) const = default;
};

/// One step of straight (rook-line) motion; used by the placement
/// procedures when a run of cells continues onto an adjacent face.
struct RookStep {
    SquareId square = -1;
    int entry_side = 0;

    auto operator<=>(const RookStep&) const = default;
};

/// Position on a cap's boundary ring, measured along the cross-section
/// perimeter: t in [0, 4n), with t = i*n at the four prism corners.
struct RingPosition {
    FaceId cap = FaceId::CapLeft;
    int t = 0;

    auto operator<=>(const RingPosition&) const = default;
};

class Board {
public:
    /// Builds the identified surface.  Throws DimensionError unless
    /// 2 <= n <= m; throws StructuralError if any internal coherence check
    /// fails (which would indicate a bug, not bad input).
    Board(int n, int m);

    const BoardSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    int m() const { return spec_.m; }

    int square_count() const { return static_cast<int>(square_corners_.size()); }
    int vertex_count() const { return static_cast<int>(vertex_points_.size()); }
    int edge_count() const { return edge_count_; }

    int face_rows(FaceId) const { return spec_.n; }
    int face_cols(FaceId f) const { return is_cap(f) ? spec_.n : spec_.m; }

    /// Square address <-> dense id.  id_of throws DimensionError for
    /// out-of-range addresses.
    SquareId id_of(const Square& sq) const;
    Square square_at(SquareId id) const;
    bool contains(const Square& sq) const;

    VertexId corner_vertex(SquareId sq, int corner) const {
        return square_corners_[static_cast<std::size_t>(sq)][static_cast<std::size_t>(corner)];
    }
    const GridPoint& point_of(VertexId v) const {
        return vertex_points_[static_cast<std::size_t>(v)];
    }
    int vertex_degree(VertexId v) const {
        return vertex_square_count_[static_cast<std::size_t>(v)];
    }
    std::span<const SquareId> squares_at_vertex(VertexId v) const {
        return {vertex_squares_[static_cast<std::size_t>(v)].data(),
                static_cast<std::size_t>(vertex_square_count_[static_cast<std::size_t>(v)])};
    }

    /// The 8 prism corners are the only trivalent vertices.
    bool is_cuboid_vertex(VertexId v) const { return vertex_degree(v) == 3; }

    /// Corner index (0..3) of this square's cuboid vertex, or nullopt.  At
    /// most one corner of any square is a cuboid vertex.
    std::optional<int> cuboid_corner_of(SquareId sq) const;

    SquareId edge_neighbor(SquareId sq, int side) const {
        return edge_neighbors_[static_cast<std::size_t>(sq)][static_cast<std::size_t>(side)];
    }
    const std::array<SquareId, 4>& edge_neighbors(SquareId sq) const {
        return edge_neighbors_[static_cast<std::size_t>(sq)];
    }

    /// Diagonal neighbors: squares sharing exactly one vertex.  3 for the
    /// 24 corner squares, 4 otherwise.
    std::vector<SquareId> diagonal_neighbors(SquareId sq) const;

    /// Edge and diagonal neighbor sets, as one call.
    std::pair<std::vector<SquareId>, std::vector<SquareId>> neighbors(SquareId sq) const;

    /// Advances one square along a diagonal.  Returns nullopt when the exit
    /// vertex is a cuboid vertex (the diagonal terminates there).
    std::optional<DiagStep> diagonal_step(const DiagStep& step) const;

    /// Advances one square along a straight row/column line.  Never
    /// terminates: the surface is closed, every rook line is a cycle.
    RookStep rook_step(const RookStep& step) const;

    /// Ring position of v if it lies on a cap's boundary ring.
    std::optional<RingPosition> ring_position(VertexId v) const;

    /// Cross-section perimeter point for ring parameter t (mod 4n).
    std::pair<int, int> perimeter_point(int t) const;

private:
    void build_vertices();
    void build_edges();
    void validate() const;

    GridPoint face_point(FaceId f, int grid_row, int grid_col) const;

    BoardSpec spec_;
    std::array<int, 6> face_offset_ = {};

    std::vector<std::array<VertexId, 4>> square_corners_;
    std::vector<GridPoint> vertex_points_;
    std::vector<std::array<SquareId, 4>> vertex_squares_;
    std::vector<std::uint8_t> vertex_square_count_;
    std::vector<std::array<SquareId, 4>> edge_neighbors_;
    std::vector<std::array<std::uint8_t, 4>> edge_neighbor_side_;
    int edge_count_ = 0;
};

inline Board make_board(int n, int m) { return Board(n, m); }

} // namespace prismbishop
