#pragma once

#include "hiveflow/flow.hpp"
#include "hiveflow/solver.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hiveflow {

using ordered_json = nlohmann::ordered_json;

/// "U:r,c:L|R|B", naming the upright triangle owning the edge.
std::string edge_key(const TriangleGrid& g, Edge e);
Edge parse_edge_key(const TriangleGrid& g, std::string_view key);

/// Edge keys in increasing edge index.
ordered_json flow_to_json(const FlowClass& f);
/// Accepts a bare edge map or a decide document with "n" and "flow".
/// Throws InvalidInstance on malformed keys or a flow that is not closed.
FlowClass flow_from_json(const ordered_json& doc);

ordered_json report_to_json(const SolveReport& r);

std::string render_dot(const FlowClass& f);
std::string render_tikz(const FlowClass& f);

} // namespace hiveflow
