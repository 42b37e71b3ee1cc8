#include "support.hpp"

#include "hiveflow/flow.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace hiveflow::testing {

Rng make_rng(std::uint64_t salt)
{
    return Rng(seed_from_env(0x5eed) * 1000003 + salt);
}

std::vector<Partition> small_partitions(int len, int max_part)
{
    std::vector<Partition> out;
    std::vector<std::int64_t> parts(len, 0);
    const std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t cap) {
        if (i == len) {
            out.emplace_back(parts);
            return;
        }
        for (std::int64_t v = 0; v <= cap; ++v) {
            parts[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, max_part);
    return out;
}

std::vector<Instance> weight_matched_triples(int len, int max_part)
{
    const auto ps = small_partitions(len, max_part);
    std::vector<Instance> out;
    for (const auto& l : ps)
        for (const auto& m : ps)
            for (const auto& nu : ps)
                if (nu.weight() == l.weight() + m.weight())
                    out.push_back(Instance::make(l, m, nu));
    return out;
}

Instance reference_instance()
{
    return Instance::make(Partition{5, 5, 5, 5, 3, 2, 1, 1, 1, 0, 0}, Partition{8, 8, 7, 5, 3, 3, 3, 3, 0, 0, 0},
                          Partition{10, 9, 9, 9, 7, 4, 4, 4, 4, 4, 4});
}

std::uint64_t brute_lr_count(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (nu.weight() != lambda.weight() + mu.weight())
        return 0;
    const int rows = std::max({static_cast<int>(lambda.length()), static_cast<int>(nu.length()), 1});
    for (int r = 0; r < rows; ++r)
        if (lambda[r] > nu[r])
            return 0;
    struct Cell {
        int r, c;
    };
    std::vector<Cell> cells;  // reverse reading order: rows top down, right to left
    for (int r = 0; r < rows; ++r)
        for (int c = static_cast<int>(nu[r]) - 1; c >= static_cast<int>(lambda[r]); --c)
            cells.push_back({r, c});
    const int letters = static_cast<int>(mu.length());
    if (cells.empty())
        return 1;
    if (letters == 0)
        return 0;
    std::vector<int> fill(cells.size(), 1);
    const auto at = [&](int r, int c) -> int {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k].r == r && cells[k].c == c)
                return fill[k];
        return 0;
    };
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        std::vector<std::int64_t> used(letters + 1, 0);
        for (std::size_t k = 0; k < cells.size() && ok; ++k) {
            const int v = fill[k];
            ++used[v];
            if (v > 1 && used[v] > used[v - 1])
                ok = false;
            const int left = at(cells[k].r, cells[k].c - 1);
            if (left && left > v)
                ok = false;
            const int up = cells[k].r > 0 ? at(cells[k].r - 1, cells[k].c) : 0;
            if (up && up >= v)
                ok = false;
        }
        for (int v = 1; v <= letters && ok; ++v)
            if (used[v] != mu[v - 1])
                ok = false;
        count += ok;
        std::size_t k = 0;
        while (k < fill.size() && fill[k] == letters)
            fill[k++] = 1;
        if (k == fill.size())
            break;
        ++fill[k];
    }
    return count;
}

namespace {

// Calls visit for every labelling of the interior vertices inside [lo, hi].
template <class Fn>
void scan_interior(HiveLabel& h, std::int64_t lo, std::int64_t hi, Fn&& visit)
{
    const TriangleGrid& g = *h.grid;
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!g.on_boundary(v))
            inner.push_back(v);
    for (Vertex v : inner)
        h.values[v] = lo;
    while (true) {
        visit();
        std::size_t k = 0;
        while (k < inner.size() && h.values[inner[k]] == hi)
            h.values[inner[k++]] = lo;
        if (k == inner.size())
            return;
        ++h.values[inner[k]];
    }
}

std::pair<std::int64_t, std::int64_t> border_range(const TriangleGrid& g, const HiveLabel& h)
{
    std::int64_t lo = 0, hi = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.on_boundary(v)) {
            lo = std::min(lo, h[v]);
            hi = std::max(hi, h[v]);
        }
    return {lo, g.n() * hi};
}

} // namespace

std::uint64_t brute_hive_count(const Instance& inst)
{
    const GridPtr grid = new_grid(inst.n);
    HiveLabel h{grid, boundary_values(*grid, inst)};
    const auto [lo, hi] = border_range(*grid, h);
    std::uint64_t count = 0;
    scan_interior(h, lo, hi, [&] { count += is_hive(h); });
    return count;
}

std::int64_t brute_max_throughput(const Instance& inst)
{
    const GridPtr grid = new_grid(inst.n);
    const TriangleGrid& g = *grid;
    const int n = inst.n;
    // increments along the left (nu), right (lambda) and bottom (mu, right to left) borders
    std::vector<std::int64_t> bounds;
    for (int r = 0; r < n; ++r)
        bounds.push_back(inst.nu[r]);
    for (int r = 0; r < n; ++r)
        bounds.push_back(inst.lambda[r]);
    for (int r = 0; r < n; ++r)
        bounds.push_back(inst.mu[r]);
    std::vector<std::int64_t> inc(bounds.size(), 0);
    std::int64_t best = -1;
    while (true) {
        std::int64_t left = 0, right = 0, bottom = 0;
        for (int r = 0; r < n; ++r) {
            left += inc[r];
            right += inc[n + r];
            bottom += inc[2 * n + r];
        }
        if (left == right + bottom) {
            HiveLabel h{grid, std::vector<std::int64_t>(g.vertex_count(), 0)};
            std::int64_t a = 0, b = 0;
            for (int m = 1; m <= n; ++m) {
                a += inc[m - 1];
                b += inc[n + m - 1];
                h.values[g.vertex(m, 0)] = a;
                h.values[g.vertex(m, m)] = b;
            }
            std::int64_t c = right;
            for (int col = n - 1; col >= 1; --col) {
                c += inc[2 * n + (n - col) - 1];
                h.values[g.vertex(n, col)] = c;
            }
            const auto [lo, hi] = border_range(g, h);
            bool found = false;
            scan_interior(h, lo, hi, [&] { found = found || is_hive(h); });
            if (found)
                best = std::max(best, left);
        }
        std::size_t k = 0;
        while (k < inc.size() && inc[k] == bounds[k])
            inc[k++] = 0;
        if (k == inc.size())
            break;
        ++inc[k];
    }
    return best;
}

std::vector<std::int64_t> reduced_turn_flow(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    std::vector<std::int64_t> w(g.turn_count(), 0);
    for (Triangle t = 0; t < g.triangle_count(); ++t) {
        std::array<std::int64_t, 3> a{};
        int pos = 0, neg = 0;
        for (int s = 0; s < 3; ++s) {
            a[s] = f.inflow(t, s);
            pos += a[s] > 0;
            neg += a[s] < 0;
        }
        for (int s = 0; s < 3; ++s)
            for (int u = 0; u < 3; ++u) {
                if (a[s] <= 0 || a[u] >= 0)
                    continue;
                w[TriangleGrid::turn_index(t, s, u)] = pos == 1 ? -a[u] : a[s];
            }
        (void)neg;
    }
    return w;
}

std::vector<std::pair<std::int64_t, std::vector<TurnIndex>>> decompose(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    std::vector<std::int64_t> w = reduced_turn_flow(f);
    std::vector<std::pair<std::int64_t, std::vector<TurnIndex>>> out;
    const auto next_turn = [&](TurnIndex x) -> TurnIndex {
        for (const TurnEdgeInfo& te : g.turnedges(x))
            if (te.to >= 0 && w[te.to] > 0)
                return te.to;
        return -1;
    };
    while (true) {
        TurnIndex start = -1;
        for (TurnIndex x = 0; x < g.turn_count() && start < 0; ++x)
            if (w[x] > 0 && g.is_border(g.turn(x).in_edge))
                start = x;
        for (TurnIndex x = 0; x < g.turn_count() && start < 0; ++x)
            if (w[x] > 0)
                start = x;
        if (start < 0)
            return out;
        std::vector<TurnIndex> walk{start};
        std::vector<int> where(g.turn_count(), -1);
        where[start] = 0;
        std::vector<TurnIndex> piece;
        while (true) {
            const TurnIndex x = walk.back();
            if (g.is_border(g.turn(x).out_edge)) {
                piece = walk;
                break;
            }
            const TurnIndex y = next_turn(x);
            if (y < 0)
                throw std::logic_error("turn flow is not conserved");
            if (where[y] >= 0) {
                piece.assign(walk.begin() + where[y], walk.end());
                break;
            }
            where[y] = static_cast<int>(walk.size());
            walk.push_back(y);
        }
        std::int64_t amount = w[piece.front()];
        for (TurnIndex x : piece)
            amount = std::min(amount, w[x]);
        for (TurnIndex x : piece)
            w[x] -= amount;
        out.emplace_back(amount, std::move(piece));
    }
}

int flatspace_crossing_violations(const FlowClass& f, const TurnPath& p, std::string* why)
{
    const TriangleGrid& g = f.g();
    const FlatspacePartition part = flatspaces(f);
    int bad = 0;
    const auto note = [&](const char* what) {
        ++bad;
        if (why)
            *why = what;
    };
    const auto cross = [&](Edge e, Triangle from, Triangle to) {
        const int a = from < 0 ? -1 : part.owner[from];
        const int b = to < 0 ? -1 : part.owner[to];
        if (a == b)
            return;
        if (a >= 0) {
            const Flatspace& L = part.spaces[a];
            const int s = L.side_of(e);
            if (s < 0 || L.sides[s].exit() != e)
                note("left a flatspace away from an exit edge");
        }
        if (b >= 0) {
            const Flatspace& L = part.spaces[b];
            const int s = L.side_of(e);
            if (s < 0 || L.sides[s].entrance() != e)
                note("entered a flatspace away from an entrance edge");
        }
    };
    for (std::size_t i = 0; i < p.turns.size(); ++i) {
        const TurnInfo& t = g.turn(p.turns[i]);
        if (i == 0)
            cross(t.in_edge, -1, t.triangle);
        const Flatspace& L = part.spaces[part.owner[t.triangle]];
        if (!L.is_border_triangle(g, t.triangle))
            note("visited an interior triangle");
        if (!t.clockwise) {
            const Edge third = g.tri(t.triangle).edges[3 - t.in_slot - t.out_slot];
            if (!L.contains_edge(third))
                note("counterclockwise turn away from the outline");
        }
        const Triangle next = i + 1 < p.turns.size() ? g.turn(p.turns[i + 1]).triangle : -1;
        cross(t.out_edge, t.triangle, next);
    }
    return bad;
}

std::vector<TurnIndex> cycle_around(const TriangleGrid& g, Vertex v, bool ccw)
{
    const auto w = g.ring(v);
    std::vector<TurnIndex> turns;
    for (int j = 0; j < 6; ++j) {
        const Edge a = g.edge_between(v, w[j]), b = g.edge_between(v, w[(j + 1) % 6]);
        const EdgeInfo& ea = g.edge_info(a);
        Triangle t = ea.upright;
        if (g.slot_of(t, b) < 0)
            t = ea.downright;
        turns.push_back(ccw ? g.turn_between(t, b, a) : g.turn_between(t, a, b));
    }
    if (ccw)
        std::reverse(turns.begin(), turns.end());
    return turns;
}

HiveLabel hexagon_hive(const GridPtr& grid, Vertex v)
{
    const TriangleGrid& g = *grid;
    const VertexId c = g.vertex_id(v);
    std::vector<std::int64_t> h(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const VertexId id = g.vertex_id(x);
        const std::int64_t dm = id.m - c.m, di = id.i - c.i;
        const std::int64_t norm = std::max({std::abs(dm), std::abs(di), std::abs(dm - di)});
        h[x] = std::min<std::int64_t>(0, 1 - norm);
    }
    const std::int64_t top = h[0];
    for (auto& x : h)
        x -= top;
    return HiveLabel{grid, std::move(h)};
}

TurnPath random_turnpath(const ResidualDigraph& R, Rng& rng)
{
    const bool from_s = rng() % 2 == 0;
    const int start = from_s ? R.source() : R.target();
    const int goal = from_s ? R.target() : R.source();
    TurnPath p;
    p.kind = from_s ? TurnPath::Kind::SourceToTarget : TurnPath::Kind::TargetToSource;
    std::vector<std::uint8_t> seen(R.vertex_count(), 0);
    int v = start;
    while (true) {
        std::vector<int> options;
        R.for_each_out(v, [&](int x) {
            if (x == goal || x >= R.grid()->turn_count() || !seen[x])
                options.push_back(x);
        });
        options.erase(std::remove(options.begin(), options.end(), start), options.end());
        if (options.empty())
            return {};
        v = options[rng() % options.size()];
        if (v == goal)
            return p;
        seen[v] = 1;
        p.turns.push_back(v);
    }
}

} // namespace hiveflow::testing
