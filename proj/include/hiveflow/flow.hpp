#pragma once

#include "hiveflow/grid.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hiveflow {

/// Integral flow class on the honeycomb graph, stored as its throughput
/// function: delta(k) is the net flow into the upright triangle owning k.
class FlowClass {
public:
    FlowClass() = default;
    explicit FlowClass(GridPtr grid);

    /// Validates closedness; throws InvalidInstance otherwise.
    static FlowClass from_throughputs(GridPtr grid, std::vector<std::int64_t> delta);

    const GridPtr& grid() const noexcept { return grid_; }
    const TriangleGrid& g() const noexcept { return *grid_; }
    const std::vector<std::int64_t>& throughputs() const noexcept { return delta_; }

    std::int64_t operator[](Edge e) const noexcept { return delta_[e]; }
    std::int64_t& operator[](Edge e) noexcept { return delta_[e]; }

    /// Net flow into triangle t through its slot.
    std::int64_t inflow(Triangle t, int slot) const noexcept
    {
        return grid_->inflow_sign(t) * delta_[grid_->tri(t).edges[slot]];
    }
    /// h(to) - h(from) along the edge joining two adjacent vertices.
    std::int64_t rise(Vertex from, Vertex to) const;

    bool is_closed() const noexcept;
    FlowClass& add_in_place(const FlowClass& d, std::int64_t s = 1);

    friend bool operator==(const FlowClass& a, const FlowClass& b)
    {
        return a.grid_ == b.grid_ && a.delta_ == b.delta_;
    }

private:
    GridPtr grid_;
    std::vector<std::int64_t> delta_;
};

FlowClass zero_flow(const GridPtr& grid);

std::int64_t slack(const FlowClass& f, RhombusIndex r);
/// The four equivalent expressions of the slack (first one is the canonical form).
std::array<std::int64_t, 4> slack_forms(const FlowClass& f, RhombusIndex r);

bool is_hive_flow(const FlowClass& f);
bool in_B(const FlowClass& f, const Capacities& caps);
bool in_P(const FlowClass& f, const Capacities& caps);
/// True iff the border constraints alone hold (no slack check).
bool within_border_bounds(const FlowClass& f, const Capacities& caps);

/// Inflow through right and bottom borders; throws InvariantViolation when it
/// differs from the outflow through the left border.
std::int64_t overall_throughput(const FlowClass& f);

std::int64_t norm(const FlowClass& f);
std::int64_t distance(const FlowClass& f, const FlowClass& g);
FlowClass add_scaled(const FlowClass& f, const FlowClass& d, std::int64_t s);
FlowClass operator-(const FlowClass& a, const FlowClass& b);

/// Support of the reduced representative, read off one triangle at a time.
bool turn_in_support(const FlowClass& d, TurnIndex x);
bool contribution_in_support(const FlowClass& d, const Contribution& c);

} // namespace hiveflow
