#include "hiveflow/hives.hpp"

#include "hiveflow/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace hiveflow {

HiveLabel flow_to_hive(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    const int n = g.n();
    HiveLabel h{f.grid(), std::vector<std::int64_t>(g.vertex_count(), 0)};
    auto& v = h.values;
    for (int m = 1; m <= n; ++m) {
        v[g.vertex(m, 0)] = v[g.vertex(m - 1, 0)] + f.rise(g.vertex(m - 1, 0), g.vertex(m, 0));
        for (int i = 1; i <= m; ++i)
            v[g.vertex(m, i)] = v[g.vertex(m, i - 1)] + f.rise(g.vertex(m, i - 1), g.vertex(m, i));
    }
#ifndef NDEBUG
    // second route: down the right border, then leftwards along the row
    for (int m = 1; m <= n; ++m) {
        std::int64_t x = 0;
        for (int j = 1; j <= m; ++j)
            x += f.rise(g.vertex(j - 1, j - 1), g.vertex(j, j));
        for (int i = m; i >= 0; --i) {
            assert(x == v[g.vertex(m, i)]);
            if (i > 0)
                x += f.rise(g.vertex(m, i), g.vertex(m, i - 1));
        }
    }
#endif
    return h;
}

FlowClass hive_to_flow(const HiveLabel& h)
{
    if (h.values.at(0) != 0)
        throw InvalidInstance("hive label must vanish at the top vertex");
    const TriangleGrid& g = *h.grid;
    std::vector<std::int64_t> delta(g.edge_count());
    for (Edge e = 0; e < g.edge_count(); ++e)
        delta[e] = h[g.edge_info(e).head] - h[g.edge_info(e).tail];
    return FlowClass::from_throughputs(h.grid, std::move(delta));
}

std::int64_t hive_slack(const HiveLabel& h, RhombusIndex r)
{
    const Rhombus& rh = h.grid->rhombus(r);
    return h[rh.left] + h[rh.right] - h[rh.top] - h[rh.bottom];
}

bool is_hive(const HiveLabel& h)
{
    for (RhombusIndex r = 0; r < h.grid->rhombus_count(); ++r)
        if (hive_slack(h, r) < 0)
            return false;
    return true;
}

std::vector<std::int64_t> boundary_values(const TriangleGrid& g, const Instance& inst)
{
    const int n = g.n();
    std::vector<std::int64_t> v(g.vertex_count(), 0);
    std::int64_t left = 0, right = 0;
    for (int m = 1; m <= n; ++m) {
        left += inst.nu[m - 1];
        right += inst.lambda[m - 1];
        v[g.vertex(m, 0)] = left;
        v[g.vertex(m, m)] = right;
    }
    std::int64_t bottom = inst.lambda.weight();
    for (int c = n; c >= 0; --c) {
        v[g.vertex(n, c)] = bottom;
        if (c > 0)
            bottom += inst.mu[n - c];
    }
    return v;
}

bool within_hive_bounds(const HiveLabel& h)
{
    const TriangleGrid& g = *h.grid;
    std::int64_t lo = h[0], hi = h[0];
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.on_boundary(v)) {
            lo = std::min(lo, h[v]);
            hi = std::max(hi, h[v]);
        }
    }
    for (std::int64_t x : h.values)
        if (x < lo || x > g.n() * hi)
            return false;
    return true;
}

const char* shape_name(Shape s)
{
    switch (s) {
    case Shape::Triangle: return "triangle";
    case Shape::Parallelogram: return "parallelogram";
    case Shape::Trapezoid: return "trapezoid";
    case Shape::Pentagon: return "pentagon";
    case Shape::Hexagon: return "hexagon";
    }
    return "?";
}

bool Flatspace::contains_edge(Edge e) const
{
    return side_of(e) >= 0;
}

int Flatspace::side_of(Edge e) const
{
    for (std::size_t s = 0; s < sides.size(); ++s)
        if (std::find(sides[s].edges.begin(), sides[s].edges.end(), e) != sides[s].edges.end())
            return static_cast<int>(s);
    return -1;
}

bool Flatspace::is_border_triangle(const TriangleGrid& g, Triangle t) const
{
    for (Vertex v : g.corners(t))
        if (std::binary_search(boundary_vertices.begin(), boundary_vertices.end(), v))
            return true;
    return false;
}

namespace {

// Outward normal direction of slot s of triangle t.
int direction_of(const TriangleGrid& g, Triangle t, int slot)
{
    static constexpr int up[3] = {5, 1, 3};    // L, R, B
    static constexpr int down[3] = {0, 4, 2};  // top, left, right
    return g.is_upright(t) ? up[slot] : down[slot];
}

// Doubled midpoint (m, i) of an edge.
std::pair<int, int> midpoint2(const TriangleGrid& g, Edge e)
{
    const VertexId a = g.vertex_id(g.edge_info(e).tail), b = g.vertex_id(g.edge_info(e).head);
    return {a.m + b.m, a.i + b.i};
}

// Position along a side in clockwise order.
int clockwise_key(const TriangleGrid& g, int dir, Edge e)
{
    const auto [m2, i2] = midpoint2(g, e);
    switch (dir) {
    case 0: return i2;
    case 1:
    case 2: return m2;
    case 3: return -i2;
    default: return -m2;
    }
}

// Lines of the triangular lattice: rows (constant m), constant i, constant m - i.
int line_of(const TriangleGrid& g, int dir, Edge e)
{
    const VertexId a = g.vertex_id(g.edge_info(e).tail);
    switch (dir) {
    case 0:
    case 3: return a.m;
    case 1:
    case 4: return a.m - a.i;
    default: return a.i;
    }
}

} // namespace

Flatspace outline(const TriangleGrid& g, std::vector<Triangle> triangles)
{
    std::sort(triangles.begin(), triangles.end());
    Flatspace L;
    L.triangles = triangles;
    std::set<Triangle> members(triangles.begin(), triangles.end());
    std::map<int, std::vector<Edge>> by_dir;
    std::set<Vertex> boundary;
    for (Triangle t : triangles) {
        for (int s = 0; s < 3; ++s) {
            const Triangle nb = g.tri(t).neighbour[s];
            if (nb >= 0 && members.count(nb))
                continue;
            const Edge e = g.tri(t).edges[s];
            by_dir[direction_of(g, t, s)].push_back(e);
            boundary.insert(g.edge_info(e).tail);
            boundary.insert(g.edge_info(e).head);
        }
    }
    L.boundary_vertices.assign(boundary.begin(), boundary.end());

    std::vector<int> dirs;
    for (auto& [dir, edges] : by_dir) {
        std::sort(edges.begin(), edges.end(),
                  [&](Edge a, Edge b) { return clockwise_key(g, dir, a) < clockwise_key(g, dir, b); });
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (line_of(g, dir, edges[i]) != line_of(g, dir, edges[0]))
                throw InvariantViolation("triangle set is not convex: side is not straight");
            if (i > 0 && clockwise_key(g, dir, edges[i]) - clockwise_key(g, dir, edges[i - 1]) != 2)
                throw InvariantViolation("triangle set is not convex: side has a gap");
        }
        L.sides.push_back({dir, edges});
        dirs.push_back(dir);
    }

    std::vector<int> gaps;
    for (std::size_t i = 0; i < dirs.size(); ++i)
        gaps.push_back((dirs[(i + 1) % dirs.size()] - dirs[i] + 6) % 6);
    if (dirs.size() == 1)
        gaps = {6};
    for (int gap : gaps)
        if (gap > 2)
            throw InvariantViolation("triangle set is not convex: reflex corner");

    switch (dirs.size()) {
    case 3: L.shape = Shape::Triangle; break;
    case 4: L.shape = gaps[0] == gaps[2] ? Shape::Parallelogram : Shape::Trapezoid; break;
    case 5: L.shape = Shape::Pentagon; break;
    case 6: L.shape = Shape::Hexagon; break;
    default: throw InvariantViolation("triangle set has an impossible outline");
    }
    return L;
}

FlatspacePartition flatspaces(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    std::vector<int> parent(g.triangle_count());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (RhombusIndex r = 0; r < g.rhombus_count(); ++r) {
        const std::int64_t s = slack(f, r);
        if (s < 0)
            throw std::invalid_argument("flatspaces need a hive flow");
        if (s == 0) {
            const int a = find(g.rhombus(r).upright), b = find(g.rhombus(r).downright);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    FlatspacePartition out;
    out.owner.assign(g.triangle_count(), -1);
    std::map<int, std::vector<Triangle>> groups;
    for (Triangle t = 0; t < g.triangle_count(); ++t)
        groups[find(t)].push_back(t);
    for (auto& [root, tris] : groups) {
        const int id = static_cast<int>(out.spaces.size());
        for (Triangle t : tris)
            out.owner[t] = id;
        out.spaces.push_back(outline(g, tris));
    }
    return out;
}

std::vector<std::int64_t> side_throughputs(const FlowClass& f, const Flatspace& L, int side)
{
    const TriangleGrid& g = f.g();
    std::vector<std::int64_t> out;
    for (Edge e : L.sides.at(side).edges) {
        const EdgeInfo& info = g.edge_info(e);
        const bool upright_inside = std::binary_search(L.triangles.begin(), L.triangles.end(), info.upright);
        out.push_back(upright_inside ? f[e] : -f[e]);
    }
    return out;
}

} // namespace hiveflow
