#include "hiveflow/io.hpp"

#include "hiveflow/errors.hpp"
#include "hiveflow/hives.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hiveflow {

namespace {

constexpr char side_letters[3] = {'L', 'R', 'B'};

// Plane coordinates of a vertex, unit edges, row m pointing down.
std::pair<double, double> position(const TriangleGrid& g, Vertex v)
{
    const VertexId id = g.vertex_id(v);
    return {id.i - 0.5 * id.m, -0.8660254037844386 * id.m};
}

std::string fixed(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    if (std::string(buf) == "-0.0000")
        return "0.0000";
    return buf;
}

std::pair<double, double> centroid(const TriangleGrid& g, Triangle t)
{
    double x = 0, y = 0;
    for (Vertex v : g.corners(t)) {
        const auto [px, py] = position(g, v);
        x += px / 3;
        y += py / 3;
    }
    return {x, y};
}

// Shade index per triangle: 0 for singleton flatspaces, else 1 + rank among larger ones.
std::vector<int> shading(const FlowClass& f)
{
    const FlatspacePartition part = flatspaces(f);
    std::vector<int> rank(part.spaces.size(), 0);
    int next = 1;
    for (std::size_t s = 0; s < part.spaces.size(); ++s)
        if (part.spaces[s].triangles.size() > 1)
            rank[s] = next++;
    std::vector<int> out(f.g().triangle_count());
    for (Triangle t = 0; t < f.g().triangle_count(); ++t)
        out[t] = rank[part.owner[t]];
    return out;
}

constexpr const char* palette[] = {"#d9d9d9", "#c6dbef", "#fdd0a2", "#c7e9c0", "#dadaeb", "#fcbba1"};
constexpr const char* tikz_palette[] = {"gray!25", "blue!15", "orange!20", "green!15", "violet!15", "red!15"};

} // namespace

std::string edge_key(const TriangleGrid& g, Edge e)
{
    const EdgeId id = g.edge_info(e).id;
    return "U:" + std::to_string(id.row) + "," + std::to_string(id.col) + ":" +
           side_letters[static_cast<int>(id.side)];
}

Edge parse_edge_key(const TriangleGrid& g, std::string_view key)
{
    int r = -1, c = -1;
    char s = 0;
    const std::string k(key);
    char tail = 0;
    if (std::sscanf(k.c_str(), "U:%d,%d:%c%c", &r, &c, &s, &tail) != 3)
        throw InvalidInstance("malformed edge key '" + k + "'");
    int side = -1;
    for (int j = 0; j < 3; ++j)
        if (side_letters[j] == s)
            side = j;
    if (side < 0 || r < 0 || r >= g.n() || c < 0 || c > r)
        throw InvalidInstance("edge key out of range '" + k + "'");
    return TriangleGrid::edge(r, c, static_cast<Side>(side));
}

ordered_json flow_to_json(const FlowClass& f)
{
    ordered_json out = ordered_json::object();
    for (Edge e = 0; e < f.g().edge_count(); ++e)
        out[edge_key(f.g(), e)] = f[e];
    return out;
}

FlowClass flow_from_json(const ordered_json& doc)
{
    if (!doc.is_object())
        throw InvalidInstance("flow document must be a JSON object");
    const bool wrapped = doc.contains("flow");
    const ordered_json& map = wrapped ? doc.at("flow") : doc;
    if (!map.is_object() || map.empty())
        throw InvalidInstance("flow map must be a non-empty object");
    int n = 0;
    if (wrapped && doc.contains("n")) {
        n = doc.at("n").get<int>();
    } else {
        for (const auto& [key, value] : map.items()) {
            int r = -1;
            if (std::sscanf(key.c_str(), "U:%d,", &r) != 1)
                throw InvalidInstance("malformed edge key '" + key + "'");
            n = std::max(n, r + 1);
        }
    }
    if (n < 1)
        throw InvalidInstance("flow document has no grid size");
    const GridPtr grid = new_grid(n);
    std::vector<std::int64_t> delta(grid->edge_count(), 0);
    for (const auto& [key, value] : map.items()) {
        if (!value.is_number_integer())
            throw InvalidInstance("throughput for '" + key + "' is not an integer");
        delta[parse_edge_key(*grid, key)] = value.get<std::int64_t>();
    }
    return FlowClass::from_throughputs(grid, std::move(delta));
}

ordered_json report_to_json(const SolveReport& r)
{
    ordered_json out;
    out["positive"] = r.positive;
    out["n"] = r.n;
    out["target"] = r.target;
    out["throughput"] = r.throughput;
    out["augmentations"] = r.augmentations_per_phase;
    out["bfs_calls"] = r.bfs_calls;
    out["algorithm"] = algorithm_name(r.algorithm);
    out["flow"] = flow_to_json(r.final_flow);
    return out;
}

std::string render_dot(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    const std::vector<int> shade = shading(f);
    std::ostringstream os;
    os << "digraph hive {\n"
       << "  graph [layout=neato, splines=line, outputorder=nodesfirst];\n"
       << "  node [shape=point, width=0.06];\n"
       << "  edge [fontsize=9];\n";
    for (Triangle t = 0; t < g.triangle_count(); ++t) {
        const auto [x, y] = centroid(g, t);
        os << "  t" << t << " [shape=triangle, style=filled, color=none, width=0.5, label=\"\", orientation="
           << (g.is_upright(t) ? 0 : 180) << ", fillcolor=\"" << (shade[t] ? palette[shade[t] % 6] : "white")
           << "\", pos=\"" << fixed(1.5 * x) << "," << fixed(1.5 * y) << "!\"];\n";
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto [x, y] = position(g, v);
        const VertexId id = g.vertex_id(v);
        os << "  v" << id.m << "_" << id.i << " [pos=\"" << fixed(1.5 * x) << "," << fixed(1.5 * y) << "!\"];\n";
    }
    for (Edge e = 0; e < g.edge_count(); ++e) {
        const EdgeInfo& info = g.edge_info(e);
        const std::int64_t d = f[e];
        Vertex a = info.tail, b = info.head;
        if (d < 0)
            std::swap(a, b);
        const VertexId ia = g.vertex_id(a), ib = g.vertex_id(b);
        os << "  v" << ia.m << "_" << ia.i << " -> v" << ib.m << "_" << ib.i << " [label=\"" << (d < 0 ? -d : d)
           << "\"" << (d == 0 ? ", arrowhead=none" : "") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_tikz(const FlowClass& f)
{
    const TriangleGrid& g = f.g();
    const std::vector<int> shade = shading(f);
    std::ostringstream os;
    os << "\\documentclass[tikz]{standalone}\n"
       << "\\begin{document}\n"
       << "\\begin{tikzpicture}[scale=1.2, flow/.style={-latex, thin}, lab/.style={font=\\tiny, fill=white, "
          "inner sep=0.5pt}]\n";
    for (Triangle t = 0; t < g.triangle_count(); ++t) {
        if (!shade[t])
            continue;
        const auto c = g.corners(t);
        os << "  \\fill[" << tikz_palette[shade[t] % 6] << "]";
        for (int j = 0; j < 3; ++j) {
            const auto [x, y] = position(g, c[j]);
            os << " (" << fixed(x) << "," << fixed(y) << ") --";
        }
        os << " cycle;\n";
    }
    for (Edge e = 0; e < g.edge_count(); ++e) {
        const EdgeInfo& info = g.edge_info(e);
        const std::int64_t d = f[e];
        Vertex a = info.tail, b = info.head;
        if (d < 0)
            std::swap(a, b);
        const auto [ax, ay] = position(g, a);
        const auto [bx, by] = position(g, b);
        os << "  \\draw" << (d == 0 ? "" : "[flow]") << " (" << fixed(ax) << "," << fixed(ay) << ") -- node[lab] {"
           << (d < 0 ? -d : d) << "} (" << fixed(bx) << "," << fixed(by) << ");\n";
    }
    os << "\\end{tikzpicture}\n"
       << "\\end{document}\n";
    return os.str();
}

} // namespace hiveflow
