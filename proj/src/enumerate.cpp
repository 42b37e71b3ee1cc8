#include "hiveflow/enumerate.hpp"

#include "hiveflow/errors.hpp"
#include "hiveflow/residual.hpp"
#include "hiveflow/solver.hpp"

#include <algorithm>
#include <limits>

namespace hiveflow {

namespace {

struct Constraint {
    // bound = h[a] + h[b] - h[c]; upper when the vertex is acute, lower when obtuse
    Vertex a, b, c;
    bool upper;
};

} // namespace

std::uint64_t enumerate_hives(const Instance& inst, std::size_t limit,
                              const std::function<void(const HiveLabel&)>& visit)
{
    const GridPtr grid = new_grid(inst.n);
    const TriangleGrid& g = *grid;
    const int n = g.n();
    HiveLabel h{grid, boundary_values(g, inst)};

    std::vector<Vertex> order;
    std::vector<int> pos(g.vertex_count(), -1);
    for (int m = 2; m < n; ++m)
        for (int i = 1; i < m; ++i) {
            pos[g.vertex(m, i)] = static_cast<int>(order.size());
            order.push_back(g.vertex(m, i));
        }

    std::vector<std::vector<Constraint>> at(order.size());
    for (const Rhombus& rh : g.rhombi()) {
        const Vertex vs[4] = {rh.left, rh.right, rh.top, rh.bottom};
        int last = 0;
        for (int j = 1; j < 4; ++j)
            if (pos[vs[j]] > pos[vs[last]])
                last = j;
        if (pos[vs[last]] < 0) {
            if (h[rh.left] + h[rh.right] < h[rh.top] + h[rh.bottom])
                return 0;
            continue;
        }
        Constraint c{};
        switch (last) {
        case 0: c = {rh.top, rh.bottom, rh.right, false}; break;
        case 1: c = {rh.top, rh.bottom, rh.left, false}; break;
        case 2: c = {rh.left, rh.right, rh.bottom, true}; break;
        default: c = {rh.left, rh.right, rh.top, true}; break;
        }
        at[pos[vs[last]]].push_back(c);
    }

    std::int64_t lo = 0, hi = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.on_boundary(v)) {
            lo = std::min(lo, h[v]);
            hi = std::max(hi, h[v]);
        }
    hi *= n;

    std::uint64_t count = 0;
    const auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            if (++count > limit)
                throw CapExceeded(limit);
            if (visit)
                visit(h);
            return;
        }
        std::int64_t a = lo, b = hi;
        for (const Constraint& c : at[k]) {
            const std::int64_t bound = h[c.a] + h[c.b] - h[c.c];
            if (c.upper)
                b = std::min(b, bound);
            else
                a = std::max(a, bound);
        }
        for (std::int64_t x = a; x <= b; ++x) {
            h.values[order[k]] = x;
            self(self, k + 1);
        }
    };
    recurse(recurse, 0);
    return count;
}

std::vector<FlowClass> enumerate_P(const Instance& inst, std::size_t limit)
{
    std::vector<FlowClass> out;
    enumerate_hives(inst, limit, [&](const HiveLabel& h) { out.push_back(hive_to_flow(h)); });
    return out;
}

std::uint64_t count_P(const Instance& inst, std::size_t limit)
{
    return enumerate_hives(inst, limit, nullptr);
}

GCycle make_cycle(const GridPtr& grid, std::vector<TurnIndex> turns)
{
    TurnPath p{turns, TurnPath::Kind::Cycle};
    return GCycle{std::move(turns), project(grid, p)};
}

std::optional<GCycle> as_cycle(const FlowClass& d)
{
    const TriangleGrid& g = d.g();
    for (Edge e = 0; e < g.edge_count(); ++e) {
        if (d[e] < -1 || d[e] > 1)
            return std::nullopt;
        if (g.is_border(e) && d[e] != 0)
            return std::nullopt;
    }
    // the turn used in each triangle, -1 if the triangle is unused
    std::vector<TurnIndex> used(g.triangle_count(), -1);
    int total = 0;
    for (Triangle t = 0; t < g.triangle_count(); ++t) {
        int in = -1, out = -1;
        for (int s = 0; s < 3; ++s) {
            const std::int64_t v = d.inflow(t, s);
            if (v > 0)
                in = s;
            else if (v < 0)
                out = s;
        }
        if (in >= 0 && out >= 0) {
            used[t] = TriangleGrid::turn_index(t, in, out);
            ++total;
        } else if (in >= 0 || out >= 0) {
            return std::nullopt;
        }
    }
    if (total == 0)
        return std::nullopt;
    const Triangle start = static_cast<Triangle>(std::find_if(used.begin(), used.end(), [](int x) { return x >= 0; }) -
                                                 used.begin());
    std::vector<TurnIndex> turns;
    Triangle t = start;
    do {
        const TurnIndex x = used[t];
        turns.push_back(x);
        const EdgeInfo& e = g.edge_info(g.turn(x).out_edge);
        t = g.is_upright(t) ? e.downright : e.upright;
        if (t < 0 || used[t] < 0 || static_cast<int>(turns.size()) > total)
            return std::nullopt;
    } while (t != start);
    if (static_cast<int>(turns.size()) != total)
        return std::nullopt;
    return GCycle{std::move(turns), d};
}

namespace {

template <class Fn>
void for_each_contribution(const TriangleGrid& g, const GCycle& c, Fn&& fn)
{
    const std::size_t len = c.turns.size();
    for (std::size_t i = 0; i < len; ++i) {
        const TurnInfo& t = g.turn(c.turns[i]);
        if (t.rhombus >= 0)
            fn(t.rhombus, t.sign, true);
        const TurnEdgeInfo* te = g.find_turnedge(c.turns[i], c.turns[(i + 1) % len]);
        if (!te)
            throw InvariantViolation("cycle turns do not concatenate");
        fn(te->rhombus, te->sign, false);
    }
}

} // namespace

bool is_f_hive_preserving(const FlowClass& f, const GCycle& c)
{
    bool ok = true;
    for_each_contribution(f.g(), c, [&](RhombusIndex r, int sign, bool) {
        if (sign < 0 && slack(f, r) == 0)
            ok = false;
    });
    return ok;
}

bool is_f_secure(const FlowClass& f, const GCycle& c)
{
    if (!is_f_hive_preserving(f, c))
        return false;
    std::vector<int> ccw_acute(f.g().rhombus_count(), 0);
    for_each_contribution(f.g(), c, [&](RhombusIndex r, int sign, bool is_turn) {
        if (is_turn && sign < 0)
            ++ccw_acute[r];
    });
    for (RhombusIndex r = 0; r < f.g().rhombus_count(); ++r)
        if (ccw_acute[r] >= 2 && slack(f, r) == 1)
            return false;
    return true;
}

bool preserves_half_step(const FlowClass& f, const GCycle& c, const Capacities& caps)
{
    Capacities doubled = caps;
    for (auto& b : doubled.bound)
        if (b >= 0)
            b *= 2;
    doubled.target *= 2;
    return in_B(add_scaled(c.flow, f, 2), doubled);
}

std::optional<GCycle> find_secure_cycle(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    const GridPtr& grid = f.grid();
    std::vector<std::uint8_t> flat(g.rhombus_count());
    for (RhombusIndex r = 0; r < g.rhombus_count(); ++r)
        flat[r] = slack(f, r) == 0;
    const auto turn_ok = [&](TurnIndex x) {
        const TurnInfo& t = g.turn(x);
        return !(t.sign < 0 && flat[t.rhombus]);
    };
    const auto step_ok = [&](const TurnEdgeInfo& te) { return !(te.sign < 0 && flat[te.rhombus]); };

    // reverse adjacency among allowed turns
    std::vector<std::vector<TurnIndex>> preds(g.turn_count());
    for (TurnIndex x = 0; x < g.turn_count(); ++x) {
        if (!turn_ok(x))
            continue;
        for (const TurnEdgeInfo& te : g.turnedges(x))
            if (te.to >= 0 && turn_ok(te.to) && step_ok(te))
                preds[te.to].push_back(x);
    }

    const int max_len = g.triangle_count();
    std::vector<std::uint8_t> on_path(g.triangle_count(), 0);
    std::vector<int> dist(g.turn_count());
    std::vector<TurnIndex> path;

    for (int len = 6; len <= max_len; len += 2) {
        for (TurnIndex x0 = 0; x0 < g.turn_count(); ++x0) {
            if (!turn_ok(x0))
                continue;
            const Triangle t0 = g.turn(x0).triangle;
            // distance back to x0 through triangles above t0
            std::fill(dist.begin(), dist.end(), -1);
            std::vector<TurnIndex> queue{x0};
            dist[x0] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const TurnIndex y = queue[head];
                for (TurnIndex p : preds[y]) {
                    if (dist[p] >= 0 || g.turn(p).triangle <= t0)
                        continue;
                    dist[p] = dist[y] + 1;
                    queue.push_back(p);
                }
            }
            bool found = false;
            path.assign(1, x0);
            on_path[t0] = 1;
            const auto dfs = [&](auto&& self, TurnIndex x) -> void {
                const int depth = static_cast<int>(path.size());
                for (const TurnEdgeInfo& te : g.turnedges(x)) {
                    if (found)
                        return;
                    if (te.to < 0 || !step_ok(te) || !turn_ok(te.to))
                        continue;
                    if (te.to == x0) {
                        if (depth == len)
                            found = true;
                        continue;
                    }
                    const Triangle t = g.turn(te.to).triangle;
                    if (t <= t0 || on_path[t] || dist[te.to] < 0 || depth + dist[te.to] > len)
                        continue;
                    on_path[t] = 1;
                    path.push_back(te.to);
                    self(self, te.to);
                    if (found)
                        return;
                    path.pop_back();
                    on_path[t] = 0;
                }
            };
            dfs(dfs, x0);
            for (TurnIndex y : path)
                on_path[g.turn(y).triangle] = 0;
            if (found) {
                GCycle c = make_cycle(grid, path);
                if (!is_f_secure(f, c))
                    throw InvariantViolation("shortest hive preserving cycle is not secure");
                return c;
            }
        }
    }
    return std::nullopt;
}

bool PzGraph::connected() const
{
    if (points.empty())
        return true;
    std::vector<std::vector<int>> adj(points.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::uint8_t> seen(points.size(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[queue[head]])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    return std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s != 0; });
}

PzGraph build_pz_graph(std::vector<FlowClass> points)
{
    PzGraph graph;
    graph.points = std::move(points);
    const auto& P = graph.points;
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            const auto c = as_cycle(P[j] - P[i]);
            if (!c)
                continue;
            graph.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            const auto back = as_cycle(P[i] - P[j]);
            if (!is_f_secure(P[i], *c) || !back || !is_f_secure(P[j], *back))
                graph.all_edges_secure = false;
        }
    }
    return graph;
}

bool multiplicity_free(const Instance& inst)
{
    const SolveReport report = decide_scaling(inst);
    if (!report.positive)
        throw InvalidInstance("multiplicity freeness needs a positive instance");
    return !find_secure_cycle(report.final_flow).has_value();
}

} // namespace hiveflow
