#include "hiveflow/grid.hpp"

#include "hiveflow/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hiveflow {

const char* side_name(Side s)
{
    switch (s) {
    case Side::Left: return "L";
    case Side::Right: return "R";
    case Side::Bottom: return "B";
    }
    return "?";
}

namespace {

// Rhombus-local names for the five edges a turn can touch.
enum Local { UL = 0, UR = 1, LL = 2, LR = 3, K = 4 };
constexpr int antipodal_local[5] = {LR, LL, UR, UL, K};

struct LocalTurn {
    bool upper;
    int from, to;
};

} // namespace

TriangleGrid::TriangleGrid(int n) : n_(n)
{
    if (n < 1)
        throw InvalidInstance("grid size must be at least 1");

    vertex_ids_.reserve(vertex_count());
    for (int m = 0; m <= n; ++m)
        for (int i = 0; i <= m; ++i)
            vertex_ids_.push_back({m, i});

    triangles_.resize(triangle_count());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= r; ++c) {
            TriangleInfo& t = triangles_[up(r, c)];
            t.id = {r, c, Orientation::Upright};
            t.edges = {edge(r, c, Side::Left), edge(r, c, Side::Right), edge(r, c, Side::Bottom)};
            t.opposite = {vertex(r + 1, c + 1), vertex(r + 1, c), vertex(r, c)};
            t.neighbour = {c > 0 ? down(r, c - 1) : -1, c < r ? down(r, c) : -1, r < n - 1 ? down(r + 1, c) : -1};
        }
        for (int c = 0; c < r; ++c) {
            TriangleInfo& t = triangles_[down(r, c)];
            t.id = {r, c, Orientation::Downright};
            t.edges = {edge(r - 1, c, Side::Bottom), edge(r, c, Side::Right), edge(r, c + 1, Side::Left)};
            t.opposite = {vertex(r + 1, c + 1), vertex(r, c + 1), vertex(r, c)};
            t.neighbour = {up(r - 1, c), up(r, c), up(r, c + 1)};
        }
    }

    edges_.resize(edge_count());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= r; ++c) {
            EdgeInfo& l = edges_[edge(r, c, Side::Left)];
            l.id = {r, c, Side::Left};
            l.tail = vertex(r + 1, c);
            l.head = vertex(r, c);
            if (c > 0) {
                l.downright = down(r, c - 1);
                l.downright_slot = 2;
            } else {
                l.border = Border::Left;
                l.border_index = r + 1;
            }

            EdgeInfo& rt = edges_[edge(r, c, Side::Right)];
            rt.id = {r, c, Side::Right};
            rt.tail = vertex(r, c);
            rt.head = vertex(r + 1, c + 1);
            if (c < r) {
                rt.downright = down(r, c);
                rt.downright_slot = 1;
            } else {
                rt.border = Border::Right;
                rt.border_index = r + 1;
            }

            EdgeInfo& b = edges_[edge(r, c, Side::Bottom)];
            b.id = {r, c, Side::Bottom};
            b.tail = vertex(r + 1, c + 1);
            b.head = vertex(r + 1, c);
            if (r < n - 1) {
                b.downright = down(r + 1, c);
                b.downright_slot = 0;
            } else {
                b.border = Border::Bottom;
                b.border_index = n - c;
            }
            for (EdgeInfo* e : {&l, &rt, &b})
                e->upright = up(r, c);
        }
    }
    for (Edge e = 0; e < edge_count(); ++e)
        if (edges_[e].border != Border::None)
            border_edges_.push_back(e);

    for (Edge k = 0; k < edge_count(); ++k) {
        EdgeInfo& info = edges_[k];
        if (info.border != Border::None)
            continue;
        Rhombus rh;
        rh.diagonal = k;
        rh.upright = info.upright;
        rh.downright = info.downright;
        rh.orientation = info.id.side;
        rh.left = info.head;
        rh.right = info.tail;
        rh.slot_k_up = static_cast<int>(info.id.side);
        rh.slot_k_down = info.downright_slot;
        rh.top = triangles_[rh.upright].opposite[rh.slot_k_up];
        rh.bottom = triangles_[rh.downright].opposite[rh.slot_k_down];
        rh.ul = edge_between(rh.top, rh.left);
        rh.ur = edge_between(rh.top, rh.right);
        rh.ll = edge_between(rh.left, rh.bottom);
        rh.lr = edge_between(rh.right, rh.bottom);
        rh.slot_ul = slot_of(rh.upright, rh.ul);
        rh.slot_ur = slot_of(rh.upright, rh.ur);
        rh.slot_ll = slot_of(rh.downright, rh.ll);
        rh.slot_lr = slot_of(rh.downright, rh.lr);
        rh.sign_ul = edges_[rh.ul].tail == rh.top ? 1 : -1;
        rh.sign_lr = edges_[rh.lr].tail == rh.bottom ? 1 : -1;
        info.rhombus = static_cast<RhombusIndex>(rhombi_.size());
        rhombi_.push_back(rh);
    }

    turns_.resize(turn_count());
    for (Triangle t = 0; t < triangle_count(); ++t) {
        const auto corner = [&](int in, int out) { return triangles_[t].opposite[3 - in - out]; };
        for (int in = 0; in < 3; ++in) {
            for (int out = 0; out < 3; ++out) {
                if (in == out)
                    continue;
                TurnInfo& x = turns_[turn_index(t, in, out)];
                x.triangle = t;
                x.in_slot = in;
                x.out_slot = out;
                x.in_edge = triangles_[t].edges[in];
                x.out_edge = triangles_[t].edges[out];

                // y-up drawing coordinates, doubled
                const auto pos = [&](Vertex v) {
                    const VertexId id = vertex_ids_[v];
                    return std::array<long, 2>{2L * id.i - id.m, -2L * id.m};
                };
                const auto mid = [&](Edge e) {
                    const auto a = pos(edges_[e].tail), b = pos(edges_[e].head);
                    return std::array<long, 2>{a[0] + b[0], a[1] + b[1]};
                };
                auto c = pos(corner(in, out));
                c[0] *= 2;
                c[1] *= 2;
                const auto p = mid(x.in_edge), q = mid(x.out_edge);
                const long cross = (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
                x.clockwise = cross < 0;

                const Edge third = triangles_[t].edges[3 - in - out];
                x.rhombus = edges_[third].rhombus;
                if (x.rhombus >= 0) {
                    const Rhombus& rh = rhombi_[x.rhombus];
                    const int watched = is_upright(t) ? rh.slot_ul : rh.slot_lr;
                    x.sign = (out == watched) - (in == watched);
                }
            }
        }
    }

    turnedges_.assign(turn_count(), {});
    for (TurnIndex x = 0; x < turn_count(); ++x) {
        const TurnInfo& tx = turns_[x];
        const EdgeInfo& e = edges_[tx.out_edge];
        if (e.border != Border::None)
            continue;
        const Triangle other = is_upright(tx.triangle) ? e.downright : e.upright;
        const int in = slot_of(other, tx.out_edge);
        const Rhombus& rh = rhombi_[e.rhombus];
        int j = 0;
        for (int out = 0; out < 3; ++out) {
            if (out == in)
                continue;
            TurnEdgeInfo& te = turnedges_[x][j++];
            te.to = turn_index(other, in, out);
            te.rhombus = e.rhombus;
            // x enters its triangle through tx.in_slot, y leaves through out
            int sign = 0;
            if (is_upright(tx.triangle)) {
                sign -= tx.in_slot == rh.slot_ul;
                sign += out == rh.slot_lr;
            } else {
                sign -= tx.in_slot == rh.slot_lr;
                sign += out == rh.slot_ul;
            }
            te.sign = sign;
        }
    }

    contributions_.resize(rhombi_.size());
    for (RhombusIndex r = 0; r < rhombus_count(); ++r) {
        const Rhombus& rh = rhombi_[r];
        const auto U = [&](int a, int b) { return turn_index(rh.upright, a, b); };
        const auto D = [&](int a, int b) { return turn_index(rh.downright, a, b); };
        const int ul = rh.slot_ul, ur = rh.slot_ur, ku = rh.slot_k_up;
        const int ll = rh.slot_ll, lr = rh.slot_lr, kd = rh.slot_k_down;
        SlackContributions& sc = contributions_[r];
        sc.positive = {Contribution{U(ur, ul)}, Contribution{D(ll, lr)}, Contribution{U(ur, ku), D(kd, lr)},
                       Contribution{D(ll, kd), U(ku, ul)}};
        sc.negative = {Contribution{U(ul, ur)}, Contribution{D(lr, ll)}, Contribution{U(ul, ku), D(kd, ll)},
                       Contribution{D(lr, kd), U(ku, ur)}};
        sc.neutral = {Contribution{U(ul, ku), D(kd, lr)}, Contribution{U(ur, ku), D(kd, ll)},
                      Contribution{D(ll, kd), U(ku, ur)}, Contribution{D(lr, kd), U(ku, ul)}};
    }
}

bool TriangleGrid::on_boundary(Vertex v) const noexcept
{
    const VertexId id = vertex_ids_[v];
    return id.i == 0 || id.i == id.m || id.m == n_;
}

std::array<Vertex, 3> TriangleGrid::corners(Triangle t) const noexcept
{
    const TriangleInfo& info = triangles_[t];
    if (info.id.orient == Orientation::Upright)
        return {info.opposite[2], info.opposite[0], info.opposite[1]};
    return {info.opposite[2], info.opposite[1], info.opposite[0]};
}

int TriangleGrid::slot_of(Triangle t, Edge e) const noexcept
{
    const auto& es = triangles_[t].edges;
    for (int s = 0; s < 3; ++s)
        if (es[s] == e)
            return s;
    return -1;
}

Edge TriangleGrid::edge_between(Vertex a, Vertex b) const noexcept
{
    VertexId p = vertex_ids_[a], q = vertex_ids_[b];
    if (q.m < p.m || (q.m == p.m && q.i < p.i))
        std::swap(p, q);
    if (q.m == p.m + 1 && q.i == p.i)
        return edge(p.m, p.i, Side::Left);
    if (q.m == p.m + 1 && q.i == p.i + 1)
        return edge(p.m, p.i, Side::Right);
    if (q.m == p.m && q.i == p.i + 1 && p.m >= 1)
        return edge(p.m - 1, p.i, Side::Bottom);
    return -1;
}

TurnIndex TriangleGrid::turn_between(Triangle t, Edge in, Edge out) const noexcept
{
    const int a = slot_of(t, in), b = slot_of(t, out);
    if (a < 0 || b < 0 || a == b)
        return -1;
    return turn_index(t, a, b);
}

const TurnEdgeInfo* TriangleGrid::find_turnedge(TurnIndex x, TurnIndex y) const noexcept
{
    for (const TurnEdgeInfo& te : turnedges_[x])
        if (te.to == y)
            return &te;
    return nullptr;
}

namespace {

// Decode a turn of rhombus rh into local names, nullopt if it does not belong.
bool to_local(const TriangleGrid& g, const Rhombus& rh, TurnIndex x, LocalTurn& out)
{
    const TurnInfo& t = g.turn(x);
    if (t.triangle == rh.upright) {
        const auto name = [&](int s) { return s == rh.slot_ul ? UL : s == rh.slot_ur ? UR : K; };
        out = {true, name(t.in_slot), name(t.out_slot)};
        return true;
    }
    if (t.triangle == rh.downright) {
        const auto name = [&](int s) { return s == rh.slot_ll ? LL : s == rh.slot_lr ? LR : K; };
        out = {false, name(t.in_slot), name(t.out_slot)};
        return true;
    }
    return false;
}

TurnIndex from_local(const Rhombus& rh, const LocalTurn& l)
{
    const auto slot = [&](int name) {
        switch (name) {
        case UL: return rh.slot_ul;
        case UR: return rh.slot_ur;
        case LL: return rh.slot_ll;
        case LR: return rh.slot_lr;
        default: return l.upper ? rh.slot_k_up : rh.slot_k_down;
        }
    };
    return TriangleGrid::turn_index(l.upper ? rh.upright : rh.downright, slot(l.from), slot(l.to));
}

} // namespace

Contribution TriangleGrid::antipodal(RhombusIndex r, const Contribution& c) const
{
    const Rhombus& rh = rhombi_[r];
    const auto flip = [&](TurnIndex x) {
        LocalTurn l{};
        if (!to_local(*this, rh, x, l))
            throw InvariantViolation("turn does not belong to the rhombus");
        return from_local(rh, LocalTurn{!l.upper, antipodal_local[l.to], antipodal_local[l.from]});
    };
    if (c.is_turn())
        return Contribution{flip(c.first)};
    return Contribution{flip(c.second), flip(c.first)};
}

int TriangleGrid::contribution_sign(RhombusIndex r, const Contribution& c) const
{
    const SlackContributions& sc = contributions_[r];
    if (std::find(sc.positive.begin(), sc.positive.end(), c) != sc.positive.end())
        return 1;
    if (std::find(sc.negative.begin(), sc.negative.end(), c) != sc.negative.end())
        return -1;
    return 0;
}

bool TriangleGrid::overlapping(RhombusIndex a, RhombusIndex b) const noexcept
{
    if (a == b)
        return false;
    const Rhombus &p = rhombi_[a], &q = rhombi_[b];
    return p.upright == q.upright || p.downright == q.downright;
}

std::array<Vertex, 6> TriangleGrid::ring(Vertex v) const
{
    const VertexId id = vertex_ids_[v];
    if (on_boundary(v))
        throw std::invalid_argument("ring() needs an interior vertex");
    const int m = id.m, i = id.i;
    return {vertex(m, i + 1), vertex(m + 1, i + 1), vertex(m + 1, i),
            vertex(m, i - 1), vertex(m - 1, i - 1), vertex(m - 1, i)};
}

GridPtr new_grid(int n)
{
    if (n < 1)
        throw InvalidInstance("grid size must be at least 1");
    static std::mutex lock;
    static std::map<int, GridPtr> cache;
    std::lock_guard guard(lock);
    GridPtr& slot = cache[n];
    if (!slot)
        slot = std::make_shared<const TriangleGrid>(n);
    return slot;
}

Capacities border_capacities(const GridPtr& grid, const Instance& inst)
{
    if (inst.n != grid->n())
        throw InvalidInstance("instance length does not match the grid");
    if (inst.nu.weight() != inst.lambda.weight() + inst.mu.weight())
        throw InvalidInstance("|nu| differs from |lambda| + |mu|");
    Capacities caps;
    caps.grid = grid;
    caps.bound.assign(grid->edge_count(), -1);
    caps.target = inst.nu.weight();
    for (Edge e : grid->border_edges()) {
        const EdgeInfo& info = grid->edge_info(e);
        const std::size_t i = static_cast<std::size_t>(info.border_index - 1);
        std::int64_t b = 0;
        switch (info.border) {
        case Border::Left: b = inst.nu[i]; break;
        case Border::Right: b = inst.lambda[i]; break;
        case Border::Bottom: b = inst.mu[i]; break;
        case Border::None: break;
        }
        caps.bound[e] = b;
        caps.largest = std::max(caps.largest, b);
    }
    return caps;
}

} // namespace hiveflow
