#pragma once

#include "hiveflow/partition.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace hiveflow {

enum class Orientation : std::uint8_t { Upright, Downright };
/// Side of an upright triangle; also names every edge of the grid.
enum class Side : std::uint8_t { Left = 0, Right = 1, Bottom = 2 };
enum class Border : std::uint8_t { None, Left, Right, Bottom };

const char* side_name(Side s);

/// x(m,i): row m from the top, offset i from the left.
struct VertexId {
    int m = 0;
    int i = 0;
    friend bool operator==(const VertexId&, const VertexId&) = default;
};

struct TriangleId {
    int row = 0;
    int col = 0;
    Orientation orient = Orientation::Upright;
    friend bool operator==(const TriangleId&, const TriangleId&) = default;
};

/// Every edge lies in exactly one upright triangle; (row, col) names it.
struct EdgeId {
    int row = 0;
    int col = 0;
    Side side = Side::Left;
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

// Dense indices used everywhere below.
using Vertex = int;
using Triangle = int;
using Edge = int;
using RhombusIndex = int;
using TurnIndex = int;

/*
 * Local side slots.  Upright (r,c): 0 = L, 1 = R, 2 = B.
 * Downright (r,c): 0 = top side (shared with upright (r-1,c) B),
 *                  1 = left side (upright (r,c) R),
 *                  2 = right side (upright (r,c+1) L).
 */
struct TriangleInfo {
    TriangleId id;
    std::array<Vertex, 3> opposite{};   // vertex opposite each slot
    std::array<Edge, 3> edges{};
    std::array<Triangle, 3> neighbour{}; // across each slot, -1 on the border
};

struct EdgeInfo {
    EdgeId id;
    // Clockwise orientation inside the upright owner; delta = h(head) - h(tail).
    Vertex tail = 0;
    Vertex head = 0;
    Triangle upright = 0;
    Triangle downright = -1;
    int downright_slot = -1;
    Border border = Border::None;
    int border_index = 0;  // 1-based, per the capacity convention
    RhombusIndex rhombus = -1;
};

/*
 * Rhombus drawn with its diagonal horizontal: the upright half U on top,
 * the downright half D below.  Obtuse corners left/right are the head/tail
 * of the diagonal, acute corners top (in U) and bottom (in D).
 */
struct Rhombus {
    Edge diagonal = 0;
    Triangle upright = 0;
    Triangle downright = 0;
    Vertex left = 0, right = 0;  // obtuse
    Vertex top = 0, bottom = 0;  // acute
    Edge ul = 0, ur = 0, ll = 0, lr = 0;
    int slot_ul = 0, slot_ur = 0, slot_k_up = 0;  // slots inside U
    int slot_ll = 0, slot_lr = 0, slot_k_down = 0; // slots inside D
    Side orientation = Side::Left;  // side of the diagonal in U
    // slack = sign_ul * delta(ul) + sign_lr * delta(lr)
    int sign_ul = 0, sign_lr = 0;
};

/// A slack contribution: a single acute turn, or a turnedge (second >= 0).
struct Contribution {
    TurnIndex first = -1;
    TurnIndex second = -1;
    bool is_turn() const noexcept { return second < 0; }
    friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct SlackContributions {
    std::array<Contribution, 4> positive;
    std::array<Contribution, 4> negative;
    std::array<Contribution, 4> neutral;
};

struct TurnInfo {
    Triangle triangle = 0;
    int in_slot = 0, out_slot = 0;
    Edge in_edge = 0, out_edge = 0;
    bool clockwise = false;
    // The rhombus in which this turn sits at an acute corner (its third side
    // is the diagonal), -1 if that side is on the border.  Sign +1/-1.
    RhombusIndex rhombus = -1;
    int sign = 0;
};

struct TurnEdgeInfo {
    TurnIndex to = -1;
    RhombusIndex rhombus = -1;  // rhombus of the crossed edge
    int sign = 0;               // +1, -1 or 0 (neutral)
};

class TriangleGrid {
public:
    explicit TriangleGrid(int n);

    int n() const noexcept { return n_; }
    int vertex_count() const noexcept { return (n_ + 1) * (n_ + 2) / 2; }
    int edge_count() const noexcept { return 3 * n_ * (n_ + 1) / 2; }
    int triangle_count() const noexcept { return n_ * n_; }
    int rhombus_count() const noexcept { return static_cast<int>(rhombi_.size()); }
    int turn_count() const noexcept { return 6 * n_ * n_; }

    static Vertex vertex(int m, int i) noexcept { return m * (m + 1) / 2 + i; }
    Vertex vertex(VertexId v) const noexcept { return vertex(v.m, v.i); }
    VertexId vertex_id(Vertex v) const noexcept { return vertex_ids_[v]; }
    bool has_vertex(int m, int i) const noexcept { return 0 <= i && i <= m && m <= n_; }
    bool on_boundary(Vertex v) const noexcept;

    static Triangle up(int r, int c) noexcept { return r * r + c; }
    static Triangle down(int r, int c) noexcept { return r * r + r + 1 + c; }
    Triangle triangle(TriangleId t) const noexcept
    {
        return t.orient == Orientation::Upright ? up(t.row, t.col) : down(t.row, t.col);
    }
    const TriangleInfo& tri(Triangle t) const noexcept { return triangles_[t]; }
    bool is_upright(Triangle t) const noexcept { return triangles_[t].id.orient == Orientation::Upright; }
    /// Vertices of a triangle, clockwise starting at its top-most-left corner.
    std::array<Vertex, 3> corners(Triangle t) const noexcept;
    /// Slot of edge e inside triangle t, or -1.
    int slot_of(Triangle t, Edge e) const noexcept;

    static Edge edge(int r, int c, Side s) noexcept { return 3 * (r * (r + 1) / 2 + c) + static_cast<int>(s); }
    Edge edge(EdgeId e) const noexcept { return edge(e.row, e.col, e.side); }
    const EdgeInfo& edge_info(Edge e) const noexcept { return edges_[e]; }
    bool is_border(Edge e) const noexcept { return edges_[e].border != Border::None; }
    /// The edge joining two adjacent vertices, -1 if they are not adjacent.
    Edge edge_between(Vertex a, Vertex b) const noexcept;
    /// Inflow into triangle t through edge e per unit of delta(e): +1 upright, -1 downright.
    int inflow_sign(Triangle t) const noexcept { return is_upright(t) ? 1 : -1; }
    const std::vector<Edge>& border_edges() const noexcept { return border_edges_; }

    const Rhombus& rhombus(RhombusIndex r) const noexcept { return rhombi_[r]; }
    const std::vector<Rhombus>& rhombi() const noexcept { return rhombi_; }
    const SlackContributions& contributions(RhombusIndex r) const noexcept { return contributions_[r]; }
    /// Reverse then rotate by 180 degrees.  Defined on positive and negative contributions.
    Contribution antipodal(RhombusIndex r, const Contribution& c) const;
    /// +1, -1 or 0 for a contribution of r (0 also for contributions of other rhombi).
    int contribution_sign(RhombusIndex r, const Contribution& c) const;
    bool overlapping(RhombusIndex a, RhombusIndex b) const noexcept;

    static TurnIndex turn_index(Triangle t, int in_slot, int out_slot) noexcept
    {
        return 6 * t + 2 * in_slot + (out_slot > in_slot ? out_slot - 1 : out_slot);
    }
    TurnIndex turn_between(Triangle t, Edge in, Edge out) const noexcept;
    const TurnInfo& turn(TurnIndex x) const noexcept { return turns_[x]; }
    /// The two turnedges leaving x (to turns starting at x's exit edge), empty at the border.
    const std::array<TurnEdgeInfo, 2>& turnedges(TurnIndex x) const noexcept { return turnedges_[x]; }
    /// Sign of (x,y) as a slack contribution, or 0 if not a turnedge / neutral.
    const TurnEdgeInfo* find_turnedge(TurnIndex x, TurnIndex y) const noexcept;

    /// Neighbours of an interior vertex in clockwise order starting east.
    std::array<Vertex, 6> ring(Vertex v) const;

private:
    int n_;
    std::vector<VertexId> vertex_ids_;
    std::vector<TriangleInfo> triangles_;
    std::vector<EdgeInfo> edges_;
    std::vector<Edge> border_edges_;
    std::vector<Rhombus> rhombi_;
    std::vector<SlackContributions> contributions_;
    std::vector<TurnInfo> turns_;
    std::vector<std::array<TurnEdgeInfo, 2>> turnedges_;
};

using GridPtr = std::shared_ptr<const TriangleGrid>;

/// Grids are cached per n; the same pointer comes back for equal n.
GridPtr new_grid(int n);

/// Border capacities b(k) on the 3n border edges; -1 marks interior edges.
struct Capacities {
    GridPtr grid;
    std::vector<std::int64_t> bound;
    std::int64_t target = 0;  // |nu|
    std::int64_t largest = 0; // max b(k)
};

Capacities border_capacities(const GridPtr& grid, const Instance& inst);

} // namespace hiveflow
