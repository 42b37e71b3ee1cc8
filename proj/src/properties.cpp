#include "hiveflow/properties.hpp"

namespace hiveflow {

int hexagon_violations(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    int bad = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.on_boundary(v))
            continue;
        const auto w = g.ring(v);
        std::array<std::int64_t, 6> s{};
        for (int j = 0; j < 6; ++j)
            s[j] = slack(f, g.edge_info(g.edge_between(v, w[j])).rhombus);
        for (int a = 0; a < 3; ++a)
            if (s[(a + 1) % 6] + s[(a + 2) % 6] != s[(a + 4) % 6] + s[(a + 5) % 6]) {
                ++bad;
                break;
            }
    }
    return bad;
}

int antipodal_violations(const FlowClass& d)
{
    const TriangleGrid& g = d.g();
    int bad = 0;
    for (RhombusIndex r = 0; r < g.rhombus_count(); ++r) {
        if (slack(d, r) < 0)
            continue;
        for (const Contribution& c : g.contributions(r).negative)
            if (contribution_in_support(d, c) && !contribution_in_support(d, g.antipodal(r, c)))
                ++bad;
    }
    return bad;
}

} // namespace hiveflow
