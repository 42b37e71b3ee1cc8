#pragma once

#include "hiveflow/hives.hpp"

#include <cstdint>
#include <random>

namespace hiveflow {

using Rng = std::mt19937_64;

/// Seed from HIVEFLOW_SEED when set, else fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Random integral hive: a nonnegative mix of the quadratic -(m^2 - mi + i^2),
/// concave folds along the three lattice directions and a linear term.
HiveLabel random_hive(const GridPtr& grid, Rng& rng, int max_coeff = 3);
FlowClass random_hive_flow(const GridPtr& grid, Rng& rng, int max_coeff = 3);

/// lambda, mu random with parts <= max_part; nu = lambda + mu pushed down by random unit moves.
/// Mostly positive, not always.
Instance random_lowered_triple(int n, int max_part, Rng& rng, int moves = -1);
/// nu a uniformly scattered partition of |lambda| + |mu|; usually not positive.
Instance random_scattered_triple(int n, int max_part, Rng& rng);

} // namespace hiveflow

namespace hiveflow {

/// Arbitrary closed flow class: coboundary of a random label.
FlowClass random_flow(const GridPtr& grid, Rng& rng, int max_value = 20);

} // namespace hiveflow
