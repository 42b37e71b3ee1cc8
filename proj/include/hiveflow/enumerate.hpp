#pragma once

#include "hiveflow/flow.hpp"
#include "hiveflow/hives.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace hiveflow {

inline constexpr std::size_t default_enumeration_limit = 1'000'000;

/// Calls visit for every integral hive with the border prescribed by inst.
/// Returns the number of hives; throws CapExceeded past limit.
std::uint64_t enumerate_hives(const Instance& inst, std::size_t limit,
                              const std::function<void(const HiveLabel&)>& visit);

/// The integer points of P(lambda, mu, nu) as flows, in lexicographic hive order.
std::vector<FlowClass> enumerate_P(const Instance& inst, std::size_t limit = default_enumeration_limit);
std::uint64_t count_P(const Instance& inst, std::size_t limit = default_enumeration_limit);

/// Proper cycle in the honeycomb graph: a cyclic sequence of turns in distinct triangles.
struct GCycle {
    std::vector<TurnIndex> turns;
    FlowClass flow;
};

GCycle make_cycle(const GridPtr& grid, std::vector<TurnIndex> turns);

/// The unit proper cycle whose flow class is d, if there is one.
std::optional<GCycle> as_cycle(const FlowClass& d);

bool is_f_hive_preserving(const FlowClass& f, const GCycle& c);
bool is_f_secure(const FlowClass& f, const GCycle& c);
/// 2f + c in B(2 lambda, 2 mu, 2 nu): the half-step form of hive preservation.
bool preserves_half_step(const FlowClass& f, const GCycle& c, const Capacities& caps);

/// A shortest f-hive preserving proper cycle, searched by iterative deepening.
std::optional<GCycle> find_secure_cycle(const FlowClass& f);

struct PzGraph {
    std::vector<FlowClass> points;
    std::vector<std::pair<int, int>> edges;  // i < j
    bool all_edges_secure = true;

    bool connected() const;
};

PzGraph build_pz_graph(std::vector<FlowClass> points);

/// Uses the solver's witness; throws InvalidInstance on non-positive instances.
bool multiplicity_free(const Instance& inst);

} // namespace hiveflow
