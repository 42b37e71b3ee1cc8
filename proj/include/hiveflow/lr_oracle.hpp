#pragma once

#include "hiveflow/partition.hpp"

#include <cstdint>

namespace hiveflow {

/// Number of LR tableaux of shape nu/lambda and content mu, by backtracking.
/// Returns 0 when lambda is not contained in nu or the weights disagree.
std::uint64_t lr_count(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Stops at the first tableau found.
bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace hiveflow
