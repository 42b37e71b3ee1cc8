#include "hiveflow/residual.hpp"

#include "hiveflow/errors.hpp"

#include <algorithm>
#include <cassert>

namespace hiveflow {

ResidualDigraph::ResidualDigraph(GridPtr grid)
    : grid_(std::move(grid)), flat_(grid_->rhombus_count(), 0), gate_(grid_->edge_count(), 0)
{
    const TriangleGrid& g = *grid_;
    for (Edge e : g.border_edges())
        gate_[e] = 1;
    for (TurnIndex x = 0; x < g.turn_count(); ++x) {
        const Border b = g.edge_info(g.turn(x).in_edge).border;
        if (b == Border::Right || b == Border::Bottom)
            from_source_.push_back(x);
        else if (b == Border::Left)
            from_target_.push_back(x);
    }
}

void ResidualDigraph::refresh(const FlowClass& f, const Capacities& caps, int ell)
{
    const TriangleGrid& g = *grid_;
    mode_ = ell < 0 ? ResidualMode::Flow : ResidualMode::Scaled;
    ell_ = ell;
    const auto& delta = f.throughputs();
    const auto& rhombi = g.rhombi();
    for (std::size_t r = 0; r < rhombi.size(); ++r) {
        const Rhombus& rh = rhombi[r];
        flat_[r] = rh.sign_ul * delta[rh.ul] + rh.sign_lr * delta[rh.lr] == 0;
    }
    const std::int64_t step = ell < 0 ? 1 : std::int64_t{1} << ell;
    for (Edge e : g.border_edges()) {
        const std::int64_t through = g.edge_info(e).border == Border::Left ? -delta[e] : delta[e];
        gate_[e] = through + step <= caps.bound[e];
    }
}

bool ResidualDigraph::has_edge(int u, int v) const
{
    bool found = false;
    for_each_out(u, [&](int w) { found = found || w == v; });
    return found;
}

std::vector<std::pair<int, int>> ResidualDigraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vertex_count(); ++v)
        for_each_out(v, [&](int w) { out.emplace_back(v, w); });
    return out;
}

ResidualDigraph build_R(const GridPtr& grid)
{
    return ResidualDigraph(grid);
}

ResidualDigraph restrict_to_f(const ResidualDigraph& R, const FlowClass& f, const Capacities& caps)
{
    if (R.grid() != f.grid())
        throw GridMismatch();
    if (!in_B(f, caps))
        throw std::invalid_argument("the residual digraph needs a flow inside B");
    ResidualDigraph D = R;
    D.refresh(f, caps);
    return D;
}

ResidualDigraph restrict_scaled(const ResidualDigraph& R, const FlowClass& f, const Capacities& caps, int ell)
{
    if (ell < 0 || ell > 62)
        throw std::invalid_argument("scale exponent out of range");
    const std::int64_t step = std::int64_t{1} << ell;
    for (std::int64_t v : f.throughputs())
        if (v % step != 0)
            throw std::invalid_argument("flow is not " + std::to_string(step) + "-integral");
    if (R.grid() != f.grid())
        throw GridMismatch();
    if (!in_B(f, caps))
        throw std::invalid_argument("the residual digraph needs a flow inside B");
    ResidualDigraph D = R;
    D.refresh(f, caps, ell);
    return D;
}

std::optional<TurnPath> shortest_st_turnpath(const ResidualDigraph& D, BfsScratch* scratch)
{
    BfsScratch local;
    BfsScratch& s = scratch ? *scratch : local;
    const int nv = D.vertex_count();
    if (static_cast<int>(s.parent.size()) != nv) {
        s.parent.assign(nv, -1);
        s.seen.assign(nv, 0);
        s.queue.resize(nv);
        s.stamp = 0;
    }
    if (++s.stamp == 0) {
        std::fill(s.seen.begin(), s.seen.end(), 0);
        s.stamp = 1;
    }
    const std::uint32_t stamp = s.stamp;
    const int src = D.source(), dst = D.target();
    int head = 0, tail = 0;
    s.queue[tail++] = src;
    s.seen[src] = stamp;
    bool reached = false;
    while (head < tail && !reached) {
        const int v = s.queue[head++];
        D.for_each_out(v, [&](int w) {
            if (reached || s.seen[w] == stamp)
                return;
            s.seen[w] = stamp;
            s.parent[w] = v;
            if (w == dst)
                reached = true;
            else
                s.queue[tail++] = w;
        });
    }
    if (!reached)
        return std::nullopt;
    TurnPath p;
    for (int v = s.parent[dst]; v != src; v = s.parent[v])
        p.turns.push_back(v);
    std::reverse(p.turns.begin(), p.turns.end());
    return p;
}

std::vector<int> bfs_layers(const ResidualDigraph& D, int from)
{
    std::vector<int> dist(D.vertex_count(), -1);
    std::vector<int> queue{from};
    dist[from] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        D.for_each_out(v, [&](int w) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

FlowClass project(const GridPtr& grid, const TurnPath& p)
{
    FlowClass f(grid);
    for (TurnIndex x : p.turns) {
        const TurnInfo& t = grid->turn(x);
        if (!grid->is_upright(t.triangle))
            continue;
        f[t.in_edge] += 1;
        f[t.out_edge] -= 1;
    }
    assert(f.is_closed());
    return f;
}

FlowClass project(const GridPtr& grid, const std::vector<std::int64_t>& turn_flow)
{
    if (static_cast<int>(turn_flow.size()) != grid->turn_count())
        throw std::invalid_argument("turn flow has the wrong length");
    FlowClass f(grid);
    for (TurnIndex x = 0; x < grid->turn_count(); ++x) {
        const TurnInfo& t = grid->turn(x);
        if (!grid->is_upright(t.triangle) || turn_flow[x] == 0)
            continue;
        f[t.in_edge] += turn_flow[x];
        f[t.out_edge] -= turn_flow[x];
    }
    return f;
}

int turnpath_slack(const TriangleGrid& g, const TurnPath& p, RhombusIndex rho)
{
    int s = 0;
    const std::size_t len = p.turns.size();
    for (std::size_t i = 0; i < len; ++i) {
        const TurnInfo& t = g.turn(p.turns[i]);
        if (t.rhombus == rho)
            s += t.sign;
        const bool wrap = p.kind == TurnPath::Kind::Cycle;
        if (i + 1 < len || (wrap && len > 1)) {
            const TurnEdgeInfo* te = g.find_turnedge(p.turns[i], p.turns[(i + 1) % len]);
            if (te && te->rhombus == rho)
                s += te->sign;
        }
    }
    return s;
}

} // namespace hiveflow
