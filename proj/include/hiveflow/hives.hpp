#pragma once

#include "hiveflow/flow.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hiveflow {

/// Integer labels on the vertices of the grid, h(top) = 0.
struct HiveLabel {
    GridPtr grid;
    std::vector<std::int64_t> values;

    std::int64_t operator[](Vertex v) const noexcept { return values[v]; }
    std::int64_t at(int m, int i) const noexcept { return values[TriangleGrid::vertex(m, i)]; }
    friend bool operator==(const HiveLabel& a, const HiveLabel& b)
    {
        return a.grid == b.grid && a.values == b.values;
    }
};

/// Accumulates throughputs down the left border and then along each row.
HiveLabel flow_to_hive(const FlowClass& f);
/// delta(k) = h(head) - h(tail); throws InvalidInstance unless h(top) = 0.
FlowClass hive_to_flow(const HiveLabel& h);

std::int64_t hive_slack(const HiveLabel& h, RhombusIndex r);
bool is_hive(const HiveLabel& h);

/// Border values prescribed by (lambda, mu, nu): partial sums along the three sides.
std::vector<std::int64_t> boundary_values(const TriangleGrid& g, const Instance& inst);

/// min over the boundary <= h <= n * max over the boundary.
bool within_hive_bounds(const HiveLabel& h);

enum class Shape { Triangle, Parallelogram, Trapezoid, Pentagon, Hexagon };
const char* shape_name(Shape s);

/*
 * Outward normal directions, clockwise from straight up:
 * 0 up, 1 upper right, 2 lower right, 3 down, 4 lower left, 5 upper left.
 */
struct FlatSide {
    int direction = 0;
    std::vector<Edge> edges;  // clockwise
    Edge entrance() const { return edges.front(); }
    Edge exit() const { return edges.back(); }
};

struct Flatspace {
    std::vector<Triangle> triangles;  // increasing
    Shape shape = Shape::Triangle;
    std::vector<FlatSide> sides;      // clockwise, starting with the smallest direction
    std::vector<Vertex> boundary_vertices;

    bool contains_edge(Edge e) const;
    /// Side containing e, or -1.
    int side_of(Edge e) const;
    bool is_border_triangle(const TriangleGrid& g, Triangle t) const;
};

struct FlatspacePartition {
    std::vector<Flatspace> spaces;
    std::vector<int> owner;  // triangle -> index into spaces
};

/// Components of the triangles glued along f-flat rhombi.  Rejects non-hive flows.
FlatspacePartition flatspaces(const FlowClass& f);

/// Outline of an arbitrary triangle set; throws InvariantViolation unless convex.
Flatspace outline(const TriangleGrid& g, std::vector<Triangle> triangles);

/// Net flow into L through each edge of its side, clockwise.
std::vector<std::int64_t> side_throughputs(const FlowClass& f, const Flatspace& L, int side);

} // namespace hiveflow
