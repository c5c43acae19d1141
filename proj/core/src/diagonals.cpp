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

#include "prismbishop/diagonals.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace prismbishop {

namespace {

// Slot axis within a square: 0 for the corner pair {0,3}, 1 for {1,2}.
int slot_axis(int entry_corner) { return (entry_corner == 0 || entry_corner == 3) ? 0 : 1; }

struct Trace {
    std::vector<DiagStep> steps;
    bool closed = false;
};

Trace trace_from(const Board& board, const DiagStep& start) {
    Trace trace;
    const int limit = 4 * board.square_count() + 8;
    DiagStep cur = start;
    while (true) {
        trace.steps.push_back(cur);
        if (static_cast<int>(trace.steps.size()) > limit)
            throw StructuralError("diagonal trace exceeded the state budget");
        auto next = board.diagonal_step(cur);
        if (!next)
            return trace;
        if (*next == start) {
            trace.closed = true;
            return trace;
        }
        cur = *next;
    }
}

using SlotKey = std::pair<SquareId, int>;

SlotKey canonical_slot(const Trace& trace) {
    SlotKey best{trace.steps.front().square, slot_axis(trace.steps.front().entry_corner)};
    for (const DiagStep& st : trace.steps)
        best = std::min(best, SlotKey{st.square, slot_axis(st.entry_corner)});
    return best;
}

std::vector<CapVisit> build_visits(const Board& board, const Trace& trace) {
    struct Event {
        bool entering = false;
        FaceId cap = FaceId::CapLeft;
        int t = 0;
    };
    std::vector<Event> events;

    const auto& steps = trace.steps;
    const std::size_t count = steps.size();
    const std::size_t pair_count = trace.closed ? count : count - 1;
    for (std::size_t i = 0; i < pair_count; ++i) {
        const DiagStep& a = steps[i];
        const DiagStep& b = steps[(i + 1) % count];
        const bool a_cap = is_cap(board.square_at(a.square).face);
        const bool b_cap = is_cap(board.square_at(b.square).face);
        if (a_cap == b_cap)
            continue;
        const VertexId shared = board.corner_vertex(b.square, b.entry_corner);
        auto ring = board.ring_position(shared);
        if (!ring)
            throw StructuralError("cap crossing away from the boundary ring");
        events.push_back({b_cap, ring->cap, ring->t});
    }

    if (events.empty())
        return {};
    if (events.size() % 2 != 0)
        throw StructuralError("unpaired cap crossing");
    if (trace.closed && !events.front().entering)
        std::rotate(events.begin(), events.begin() + 1, events.end());

    const int n = board.n();
    const int ring_len = 4 * n;
    std::vector<CapVisit> visits;
    visits.reserve(events.size() / 2);
    for (std::size_t i = 0; i < events.size(); i += 2) {
        const Event& in = events[i];
        const Event& out = events[i + 1];
        if (!in.entering || out.entering || in.cap != out.cap)
            throw StructuralError("cap crossings do not alternate enter/leave");
        CapVisit v;
        v.cap = in.cap;
        v.ring_in = in.t;
        v.ring_out = out.t;
        const int sum = (in.t + out.t) % ring_len;
        if (sum == (2 * n) % ring_len) {
            v.family = ChordFamily::Main;
            auto [y, z] = board.perimeter_point(v.ring_in);
            v.offset = y - z;
        } else if (sum == 0) {
            v.family = ChordFamily::Anti;
            auto [y, z] = board.perimeter_point(v.ring_in);
            v.offset = y + z - n;
        } else {
            throw StructuralError("cap pass is not a 45-degree chord");
        }
        if (v.offset == 0 || std::abs(v.offset) >= n)
            throw StructuralError("cap chord offset out of range");
        visits.push_back(v);
    }
    return visits;
}

} // namespace

DiagonalAtlas enumerate_diagonals(const Board& board) {
    const int square_count = board.square_count();
    DiagonalAtlas atlas;
    atlas.square_diagonals.assign(static_cast<std::size_t>(square_count), {-1, -1});

    auto claim_slots = [&](const Trace& trace, int id) {
        for (const DiagStep& st : trace.steps) {
            int& owner =
                atlas.square_diagonals[static_cast<std::size_t>(st.square)]
                                      [static_cast<std::size_t>(slot_axis(st.entry_corner))];
            if (owner == id)
                throw StructuralError("diagonal revisits a slot");
            if (owner != -1)
                throw StructuralError("slot claimed by two diagonals");
            owner = id;
        }
    };

    // Open diagonals: start at each corner square, entering through its
    // cuboid-vertex corner (the direction blocked at the vertex).  Each
    // open diagonal is traced once per endpoint.
    std::map<SlotKey, Trace> open_traces;
    int initial_states = 0;
    for (SquareId sq = 0; sq < square_count; ++sq) {
        auto corner = board.cuboid_corner_of(sq);
        if (!corner)
            continue;
        ++initial_states;
        Trace trace = trace_from(board, DiagStep{sq, *corner});
        if (trace.closed)
            throw StructuralError("trace from a corner square closed on itself");
        const SlotKey key = canonical_slot(trace);
        auto it = open_traces.find(key);
        if (it == open_traces.end()) {
            open_traces.emplace(key, std::move(trace));
        } else {
            if (it->second.steps.size() != trace.steps.size())
                throw StructuralError("open diagonal traced with two lengths");
            if (trace.steps.front().square == it->second.steps.front().square)
                throw StructuralError("open diagonal endpoints coincide");
            // Canonical orientation: start from the smaller endpoint.
            if (trace.steps.front().square < it->second.steps.front().square)
                it->second = std::move(trace);
        }
    }
    if (initial_states != 24)
        throw StructuralError("expected 24 corner squares");
    if (open_traces.size() != 12)
        throw StructuralError("expected 12 open diagonals");

    auto finish = [&](const Trace& trace, DiagonalKind kind) {
        MaximalDiagonal diag;
        diag.id = static_cast<int>(atlas.diagonals.size());
        diag.kind = kind;
        diag.squares.reserve(trace.steps.size());
        for (const DiagStep& st : trace.steps)
            diag.squares.push_back(st.square);
        if (kind == DiagonalKind::Open) {
            diag.endpoints = {diag.squares.front(), diag.squares.back()};
            if (diag.endpoints[0] == diag.endpoints[1])
                throw StructuralError("open diagonal endpoints coincide");
        }
        diag.visits = build_visits(board, trace);
        std::vector<SquareId> sorted = diag.squares;
        std::sort(sorted.begin(), sorted.end());
        diag.self_crossing = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        claim_slots(trace, diag.id);
        if (diag.self_crossing)
            atlas.self_crossing_ids.push_back(diag.id);
        atlas.diagonals.push_back(std::move(diag));
    };

    for (const auto& [key, trace] : open_traces)
        finish(trace, DiagonalKind::Open);
    atlas.open_count = static_cast<int>(atlas.diagonals.size());

    // Closed diagonals: sweep remaining slots in lexicographic order.  The
    // scan order makes the first slot of each new cycle its canonical one.
    for (SquareId sq = 0; sq < square_count; ++sq) {
        for (int axis = 0; axis < 2; ++axis) {
            if (atlas.square_diagonals[static_cast<std::size_t>(sq)][static_cast<std::size_t>(axis)] != -1)
                continue;
            Trace trace = trace_from(board, DiagStep{sq, axis == 0 ? 0 : 1});
            if (!trace.closed)
                throw StructuralError("slot outside the open diagonals traced to a terminus");
            finish(trace, DiagonalKind::Closed);
        }
    }
    atlas.closed_count = atlas.total() - atlas.open_count;

    long slot_sum = 0;
    for (const auto& d : atlas.diagonals)
        slot_sum += d.length();
    if (slot_sum != 2L * square_count)
        throw StructuralError("diagonal lengths do not cover every slot exactly once");

    return atlas;
}

std::pair<int, int> face_visit_profile(const DiagonalAtlas& atlas, int diagonal_id) {
    const MaximalDiagonal& diag = atlas.diagonals.at(static_cast<std::size_t>(diagonal_id));
    if (diag.kind != DiagonalKind::Closed)
        throw Error("face_visit_profile requires a closed diagonal");
    int left = 0;
    int right = 0;
    for (const CapVisit& v : diag.visits)
        (v.cap == FaceId::CapLeft ? left : right)++;
    return {left, right};
}

int upper_bound_from_atlas(const DiagonalAtlas& atlas) {
    if (!atlas.self_crossing_ids.empty())
        throw StructuralError("a square lies on fewer than 2 distinct diagonals");
    return atlas.total() / 2;
}

namespace {

int line_index(FaceId cap, ChordFamily family) {
    return (cap == FaceId::CapRight ? 2 : 0) + (family == ChordFamily::Anti ? 1 : 0);
}

struct LineRef {
    FaceId cap;
    ChordFamily family;
};

constexpr std::array<LineRef, 4> kLineOrder = {{
    {FaceId::CapLeft, ChordFamily::Main},
    {FaceId::CapLeft, ChordFamily::Anti},
    {FaceId::CapRight, ChordFamily::Main},
    {FaceId::CapRight, ChordFamily::Anti},
}};

} // namespace

std::vector<CycleSet> cycle_sets(const Board& board, const DiagonalAtlas& atlas) {
    const int n = board.n();
    const BoardSpec& spec = board.spec();
    const bool k_odd = spec.k % 2 != 0;

    // Chord lines: per (cap, family), the slots at offsets -(n-1)..(n-1).
    // Index offset + (n-1); the center slot (the cap diagonal itself) stays
    // empty.  Every other slot must be crossed exactly once.
    std::array<std::vector<int>, 4> lines;
    for (auto& line : lines)
        line.assign(static_cast<std::size_t>(2 * n - 1), -1);
    for (const MaximalDiagonal& diag : atlas.diagonals) {
        for (const CapVisit& v : diag.visits) {
            int& slot = lines[static_cast<std::size_t>(line_index(v.cap, v.family))]
                             [static_cast<std::size_t>(v.offset + n - 1)];
            if (slot != -1)
                throw StructuralError("cap chord crossed by two diagonals");
            slot = diag.id;
        }
    }
    for (const auto& line : lines)
        for (int offset = -(n - 1); offset <= n - 1; ++offset)
            if (offset != 0 && line[static_cast<std::size_t>(offset + n - 1)] == -1)
                throw StructuralError("cap chord crossed by no diagonal");

    auto is_closed = [&](int id) {
        return atlas.diagonals[static_cast<std::size_t>(id)].kind == DiagonalKind::Closed;
    };

    // Adjacent parallel chords with no open diagonal between them belong to
    // the same cycle set; union-find over those adjacencies.
    std::vector<int> parent(static_cast<std::size_t>(atlas.total()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    for (const auto& line : lines) {
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            const int a = line[i];
            const int b = line[i + 1];
            if (a != -1 && b != -1 && is_closed(a) && is_closed(b))
                unite(a, b);
        }
    }

    std::map<int, std::vector<int>> components;
    for (const MaximalDiagonal& diag : atlas.diagonals)
        if (diag.kind == DiagonalKind::Closed)
            components[find(diag.id)].push_back(diag.id);

    std::vector<CycleSet> sets;
    for (auto& [root, members] : components) {
        CycleSet set;

        // Per-cap visit count must be uniform across the set.
        int j = -1;
        for (int id : members) {
            auto [left, right] = face_visit_profile(atlas, id);
            if (left != right)
                throw StructuralError("closed diagonal passes the caps unevenly");
            if (j == -1)
                j = left;
            else if (j != left)
                throw StructuralError("cycle set members disagree on cap visits");
        }
        if (j != 1 && j != 2)
            throw StructuralError("cap visit count outside {1, 2}");
        set.cap_visits = j;
        set.kind = (k_odd == (j == 1)) ? CycleSetKind::First : CycleSetKind::Second;

        // Ordering line: first line every member crosses.
        const std::vector<int>* line = nullptr;
        for (const LineRef& ref : kLineOrder) {
            const auto& candidate = lines[static_cast<std::size_t>(line_index(ref.cap, ref.family))];
            bool all = true;
            for (int id : members) {
                if (std::find(candidate.begin(), candidate.end(), id) == candidate.end()) {
                    all = false;
                    break;
                }
            }
            if (all) {
                set.line_cap = ref.cap;
                set.line_family = ref.family;
                line = &candidate;
                break;
            }
        }
        if (line == nullptr)
            throw StructuralError("cycle set members share no chord line");

        // Number members by their first crossing along the line, measured
        // from the cap diagonal outward.
        std::vector<std::pair<std::pair<int, int>, int>> keyed;
        for (int id : members) {
            std::pair<int, int> best{n, n};
            for (int offset = -(n - 1); offset <= n - 1; ++offset) {
                if (offset == 0)
                    continue;
                if ((*line)[static_cast<std::size_t>(offset + n - 1)] == id)
                    best = std::min(best, {std::abs(offset), offset});
            }
            keyed.push_back({best, id});
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
            if (keyed[i].first == keyed[i + 1].first)
                throw StructuralError("cycle set ordering key collision");
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            set.members.push_back(keyed[i].second);
            (i % 2 == 0 ? set.p_members : set.q_members).push_back(keyed[i].second);
        }
        sets.push_back(std::move(set));
    }

    std::sort(sets.begin(), sets.end(), [](const CycleSet& a, const CycleSet& b) {
        if (a.kind != b.kind)
            return a.kind < b.kind;
        return a.members.front() < b.members.front();
    });

    // The partition must realize the expected family structure; anything
    // else signals a net-convention fault.
    const int r = spec.r;
    const int first_size = (r == 0) ? n - 1 : n - 1 - r;
    const int first_count = first_size >= 1 ? (k_odd ? 4 : 2) : 0;
    const int second_size = r - 1;
    const int second_count = second_size >= 1 ? (k_odd ? 2 : 4) : 0;
    int firsts = 0;
    int seconds = 0;
    for (const CycleSet& set : sets) {
        if (set.kind == CycleSetKind::First) {
            ++firsts;
            if (set.size() != first_size)
                throw StructuralError("first-kind cycle set has unexpected size");
        } else {
            ++seconds;
            if (set.size() != second_size)
                throw StructuralError("second-kind cycle set has unexpected size");
        }
    }
    if (firsts != first_count || seconds != second_count)
        throw StructuralError("unexpected number of cycle sets");

    return sets;
}

bool p_coverage_check(const Board& board, const DiagonalAtlas& atlas,
                      const std::vector<CycleSet>& sets) {
    const BoardSpec& spec = board.spec();
    if (spec.n % 2 != 0 || spec.r % 2 != 0)
        throw Error("p-coverage analysis applies only when n and r are both even");

    std::vector<char> in_p(static_cast<std::size_t>(atlas.total()), 0);
    for (const CycleSet& set : sets)
        for (int id : set.p_members)
            in_p[static_cast<std::size_t>(id)] = 1;

    for (SquareId sq = 0; sq < static_cast<SquareId>(atlas.square_diagonals.size()); ++sq) {
        const auto& pair = atlas.diagonals_of(sq);
        if (!in_p[static_cast<std::size_t>(pair[0])] && !in_p[static_cast<std::size_t>(pair[1])])
            return false;
    }
    return true;
}

std::string format_atlas_listing(const DiagonalAtlas& atlas) {
    std::ostringstream out;
    out << "# id kind length cap_left_visits cap_right_visits\n";
    for (const MaximalDiagonal& diag : atlas.diagonals) {
        int left = 0;
        int right = 0;
        for (const CapVisit& v : diag.visits)
            (v.cap == FaceId::CapLeft ? left : right)++;
        out << diag.id << ' ' << (diag.kind == DiagonalKind::Open ? "open" : "closed") << ' '
            << diag.length() << ' ' << left << ' ' << right << '\n';
    }
    return out.str();
}

} // namespace prismbishop
