#pragma once

#include "hiveflow/flow.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hiveflow {

enum class ResidualMode { Full, Flow, Scaled };

struct TurnPath {
    enum class Kind { SourceToTarget, TargetToSource, Cycle };
    std::vector<TurnIndex> turns;
    Kind kind = Kind::SourceToTarget;
};

/// Reusable BFS buffers; one per caller.
struct BfsScratch {
    std::vector<int> parent;
    std::vector<std::uint32_t> seen;
    std::vector<int> queue;
    std::uint32_t stamp = 0;
};

/*
 * The turn digraph R with deletions kept as filters: a turn or turnedge is
 * removed when it is a negative contribution of a flat rhombus, and the four
 * s/t edges crossing a border edge share one gate flag.
 */
class ResidualDigraph {
public:
    explicit ResidualDigraph(GridPtr grid);

    const GridPtr& grid() const noexcept { return grid_; }
    ResidualMode mode() const noexcept { return mode_; }
    int scale() const noexcept { return ell_; }

    int vertex_count() const noexcept { return grid_->turn_count() + 2; }
    int source() const noexcept { return grid_->turn_count(); }
    int target() const noexcept { return grid_->turn_count() + 1; }

    bool turn_present(TurnIndex x) const noexcept
    {
        const TurnInfo& t = grid_->turn(x);
        return !(t.sign < 0 && flat_[t.rhombus]);
    }
    bool turnedge_present(TurnIndex x, int j) const noexcept
    {
        const TurnEdgeInfo& te = grid_->turnedges(x)[j];
        return te.to >= 0 && turn_present(x) && turn_present(te.to) && !(te.sign < 0 && flat_[te.rhombus]);
    }
    bool gate_open(Edge e) const noexcept { return gate_[e] != 0; }
    bool rhombus_flat(RhombusIndex r) const noexcept { return flat_[r] != 0; }

    /// Recomputes every filter from f.  ell < 0 gives R_f, ell >= 0 gives R_f^ell.
    void refresh(const FlowClass& f, const Capacities& caps, int ell = -1);

    /// Calls fn(w) for each out-neighbour of v in increasing id order.
    template <class Fn>
    void for_each_out(int v, Fn&& fn) const;

    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;

private:
    GridPtr grid_;
    ResidualMode mode_ = ResidualMode::Full;
    int ell_ = -1;
    std::vector<std::uint8_t> flat_;
    std::vector<std::uint8_t> gate_;
    // s gates: turns starting at right/bottom; t gates: turns starting at the left border
    std::vector<TurnIndex> from_source_;
    std::vector<TurnIndex> from_target_;
};

template <class Fn>
void ResidualDigraph::for_each_out(int v, Fn&& fn) const
{
    const TriangleGrid& g = *grid_;
    if (v == source() || v == target()) {
        for (TurnIndex x : v == source() ? from_source_ : from_target_)
            if (gate_[g.turn(x).in_edge] && turn_present(x))
                fn(x);
        return;
    }
    if (!turn_present(v))
        return;
    const TurnInfo& t = g.turn(v);
    const EdgeInfo& e = g.edge_info(t.out_edge);
    if (e.border == Border::None) {
        for (int j = 0; j < 2; ++j)
            if (turnedge_present(v, j))
                fn(g.turnedges(v)[j].to);
    } else if (gate_[t.out_edge]) {
        fn(e.border == Border::Left ? target() : source());
    }
}

ResidualDigraph build_R(const GridPtr& grid);
/// R_f; rejects f outside B.
ResidualDigraph restrict_to_f(const ResidualDigraph& R, const FlowClass& f, const Capacities& caps);
/// R_f^ell; rejects f outside B or not 2^ell-integral.
ResidualDigraph restrict_scaled(const ResidualDigraph& R, const FlowClass& f, const Capacities& caps, int ell);

/// Breadth-first, neighbours in increasing id, stops when t is reached.
std::optional<TurnPath> shortest_st_turnpath(const ResidualDigraph& D, BfsScratch* scratch = nullptr);
/// All BFS distances from s (-1 when unreachable); used by tests.
std::vector<int> bfs_layers(const ResidualDigraph& D, int from);

/// pi: each turn in an upright triangle sends one unit in through its entry and out through its exit.
FlowClass project(const GridPtr& grid, const TurnPath& p);
FlowClass project(const GridPtr& grid, const std::vector<std::int64_t>& turn_flow);

/// Sum of the signs of the contributions of rho used by p.
int turnpath_slack(const TriangleGrid& g, const TurnPath& p, RhombusIndex rho);

} // namespace hiveflow
