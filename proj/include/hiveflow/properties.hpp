#pragma once

#include "hiveflow/flow.hpp"

namespace hiveflow {

/// Interior vertices where some pair of opposite trapezoids disagrees in total slack.
int hexagon_violations(const FlowClass& f);

/// Negative contributions in the support of d, over rhombi with nonnegative
/// slack, whose antipodal contribution is missing from the support.
int antipodal_violations(const FlowClass& d);

} // namespace hiveflow
