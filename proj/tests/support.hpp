#pragma once

#include "hiveflow/hives.hpp"
#include "hiveflow/random.hpp"
#include "hiveflow/residual.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hiveflow::testing {

/// Seed shared by the randomized suites; HIVEFLOW_SEED overrides it.
Rng make_rng(std::uint64_t salt = 0);

/// Partitions with at most len parts, each at most max_part.
std::vector<Partition> small_partitions(int len, int max_part);
/// All triples over small_partitions(len, max_part) with matching weights.
std::vector<Instance> weight_matched_triples(int len, int max_part);

/// The n = 11 instance whose hive flow has throughput 68.
Instance reference_instance();

/// LR tableaux by filling every cell with every letter, no pruning beyond bounds.
std::uint64_t brute_lr_count(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Integer hives with the given border, every interior label tried in the bbound box.
std::uint64_t brute_hive_count(const Instance& inst);

/// max delta(f) over integral f in B, by scanning all border values and interior labels.
std::int64_t brute_max_throughput(const Instance& inst);

/// Reduced representative: flow on each turn, read off triangle by triangle.
std::vector<std::int64_t> reduced_turn_flow(const FlowClass& f);

/// Weighted paths and cycles of turns whose projections sum to f.
std::vector<std::pair<std::int64_t, std::vector<TurnIndex>>> decompose(const FlowClass& f);

/// Count of places where p breaks the flatspace crossing rules of f:
/// interior or reflex visits, or crossings not at entrance/exit edges.
int flatspace_crossing_violations(const FlowClass& f, const TurnPath& p, std::string* why = nullptr);

/// Cycle of six turns around interior vertex v; ccw runs counterclockwise around v.
std::vector<TurnIndex> cycle_around(const TriangleGrid& g, Vertex v, bool ccw);

/// Hive equal to min(0, 1 - |x - v|) in the hexagonal norm, shifted to vanish at
/// the top: flat on the six triangles around v and bent along their outline.
HiveLabel hexagon_hive(const GridPtr& grid, Vertex v);

/// A random complete turnpath of R (s to t or t to s), or empty if the walk got stuck.
TurnPath random_turnpath(const ResidualDigraph& R, Rng& rng);

} // namespace hiveflow::testing
