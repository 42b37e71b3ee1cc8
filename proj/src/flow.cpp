#include "hiveflow/flow.hpp"

#include "hiveflow/errors.hpp"

#include <cassert>
#include <cstdlib>

namespace hiveflow {

FlowClass::FlowClass(GridPtr grid) : grid_(std::move(grid)), delta_(grid_->edge_count(), 0) {}

FlowClass FlowClass::from_throughputs(GridPtr grid, std::vector<std::int64_t> delta)
{
    if (static_cast<int>(delta.size()) != grid->edge_count())
        throw InvalidInstance("throughput vector has " + std::to_string(delta.size()) + " entries, grid has " +
                              std::to_string(grid->edge_count()) + " edges");
    FlowClass f;
    f.grid_ = std::move(grid);
    f.delta_ = std::move(delta);
    if (!f.is_closed())
        throw InvalidInstance("throughputs violate closedness");
    return f;
}

std::int64_t FlowClass::rise(Vertex from, Vertex to) const
{
    const Edge e = grid_->edge_between(from, to);
    if (e < 0)
        throw std::invalid_argument("vertices are not adjacent");
    const EdgeInfo& info = grid_->edge_info(e);
    return info.tail == from ? delta_[e] : -delta_[e];
}

bool FlowClass::is_closed() const noexcept
{
    for (Triangle t = 0; t < grid_->triangle_count(); ++t) {
        const auto& es = grid_->tri(t).edges;
        if (delta_[es[0]] + delta_[es[1]] + delta_[es[2]] != 0)
            return false;
    }
    return true;
}

FlowClass& FlowClass::add_in_place(const FlowClass& d, std::int64_t s)
{
    if (d.grid_ != grid_)
        throw GridMismatch();
    for (std::size_t k = 0; k < delta_.size(); ++k)
        delta_[k] += s * d.delta_[k];
    return *this;
}

FlowClass zero_flow(const GridPtr& grid)
{
    return FlowClass(grid);
}

std::int64_t slack(const FlowClass& f, RhombusIndex r)
{
    const Rhombus& rh = f.g().rhombus(r);
    const std::int64_t s = rh.sign_ul * f[rh.ul] + rh.sign_lr * f[rh.lr];
#ifndef NDEBUG
    const auto forms = slack_forms(f, r);
    for (std::int64_t v : forms)
        assert(v == s);
#endif
    return s;
}

std::array<std::int64_t, 4> slack_forms(const FlowClass& f, RhombusIndex r)
{
    const Rhombus& rh = f.g().rhombus(r);
    const Vertex L = rh.left, R = rh.right, T = rh.top, B = rh.bottom;
    return {
        f.rise(T, L) + f.rise(B, R),
        f.rise(B, L) + f.rise(T, R),
        f.rise(T, L) + f.rise(L, R) + f.rise(B, L),
        f.rise(T, R) + f.rise(R, L) + f.rise(B, R),
    };
}

bool is_hive_flow(const FlowClass& f)
{
    for (RhombusIndex r = 0; r < f.g().rhombus_count(); ++r)
        if (slack(f, r) < 0)
            return false;
    return true;
}

bool within_border_bounds(const FlowClass& f, const Capacities& caps)
{
    if (caps.grid != f.grid())
        throw GridMismatch();
    for (Edge e : f.g().border_edges()) {
        const std::int64_t through = f.g().edge_info(e).border == Border::Left ? -f[e] : f[e];
        if (through < 0 || through > caps.bound[e])
            return false;
    }
    return true;
}

bool in_B(const FlowClass& f, const Capacities& caps)
{
    return within_border_bounds(f, caps) && is_hive_flow(f);
}

bool in_P(const FlowClass& f, const Capacities& caps)
{
    if (!in_B(f, caps))
        return false;
    for (Edge e : f.g().border_edges()) {
        const std::int64_t through = f.g().edge_info(e).border == Border::Left ? -f[e] : f[e];
        if (through != caps.bound[e])
            return false;
    }
    return true;
}

std::int64_t overall_throughput(const FlowClass& f)
{
    std::int64_t in = 0, out = 0;
    for (Edge e : f.g().border_edges()) {
        if (f.g().edge_info(e).border == Border::Left)
            out -= f[e];
        else
            in += f[e];
    }
    if (in != out)
        throw InvariantViolation("border inflow " + std::to_string(in) + " differs from outflow " +
                                 std::to_string(out));
    return in;
}

std::int64_t norm(const FlowClass& f)
{
    std::int64_t s = 0;
    for (std::int64_t v : f.throughputs())
        s += v < 0 ? -v : v;
    return s;
}

std::int64_t distance(const FlowClass& f, const FlowClass& g)
{
    return norm(g - f);
}

FlowClass add_scaled(const FlowClass& f, const FlowClass& d, std::int64_t s)
{
    FlowClass out = f;
    out.add_in_place(d, s);
    return out;
}

FlowClass operator-(const FlowClass& a, const FlowClass& b)
{
    return add_scaled(a, b, -1);
}

bool turn_in_support(const FlowClass& d, TurnIndex x)
{
    const TurnInfo& t = d.g().turn(x);
    return d.inflow(t.triangle, t.in_slot) > 0 && d.inflow(t.triangle, t.out_slot) < 0;
}

bool contribution_in_support(const FlowClass& d, const Contribution& c)
{
    return turn_in_support(d, c.first) && (c.is_turn() || turn_in_support(d, c.second));
}

} // namespace hiveflow
