#include "hiveflow/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

namespace hiveflow {

std::uint64_t seed_from_env(std::uint64_t fallback)
{
    if (const char* s = std::getenv("HIVEFLOW_SEED"); s && *s)
        return std::stoull(s);
    return fallback;
}

namespace {

int uniform(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

HiveLabel random_hive(const GridPtr& grid, Rng& rng, int max_coeff)
{
    const TriangleGrid& g = *grid;
    const int n = g.n();
    std::vector<std::int64_t> h(g.vertex_count(), 0);
    const std::int64_t s = uniform(rng, 0, max_coeff);
    const std::int64_t a = uniform(rng, -max_coeff, max_coeff), b = uniform(rng, -max_coeff, max_coeff);
    // folds: -c * max(0, coordinate - k) for the three coordinates m, i, m - i
    struct Fold {
        int coord, k;
        std::int64_t c;
    };
    std::vector<Fold> folds;
    const int nfolds = uniform(rng, 0, 4);
    for (int j = 0; j < nfolds; ++j)
        folds.push_back({uniform(rng, 0, 2), uniform(rng, 0, n), uniform(rng, 1, max_coeff)});
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const VertexId id = g.vertex_id(v);
        const std::int64_t m = id.m, i = id.i;
        std::int64_t x = -s * (m * m - m * i + i * i) + a * m + b * i;
        for (const Fold& f : folds) {
            const std::int64_t coord = f.coord == 0 ? m : f.coord == 1 ? i : m - i;
            x -= f.c * std::max<std::int64_t>(0, coord - f.k);
        }
        h[v] = x;
    }
    return HiveLabel{grid, std::move(h)};
}

FlowClass random_hive_flow(const GridPtr& grid, Rng& rng, int max_coeff)
{
    return hive_to_flow(random_hive(grid, rng, max_coeff));
}

Instance random_lowered_triple(int n, int max_part, Rng& rng, int moves)
{
    std::vector<std::int64_t> l(n), m(n), nu(n);
    for (int i = 0; i < n; ++i) {
        l[i] = uniform(rng, 0, max_part);
        m[i] = uniform(rng, 0, max_part);
    }
    std::sort(l.rbegin(), l.rend());
    std::sort(m.rbegin(), m.rend());
    for (int i = 0; i < n; ++i)
        nu[i] = l[i] + m[i];
    if (moves < 0)
        moves = uniform(rng, 0, 4 * n * max_part);
    for (int k = 0; k < moves && n > 1; ++k) {
        const int i = uniform(rng, 0, n - 2);
        if (nu[i] == 0)
            continue;
        --nu[i];
        ++nu[i + 1];
        if (nu[i] < nu[i + 1]) {
            ++nu[i];
            --nu[i + 1];
        }
    }
    return Instance::make(Partition(l), Partition(m), Partition(nu));
}

Instance random_scattered_triple(int n, int max_part, Rng& rng)
{
    std::vector<std::int64_t> l(n), m(n), nu(n, 0);
    for (int i = 0; i < n; ++i) {
        l[i] = uniform(rng, 0, max_part);
        m[i] = uniform(rng, 0, max_part);
    }
    std::sort(l.rbegin(), l.rend());
    std::sort(m.rbegin(), m.rend());
    std::int64_t w = 0;
    for (int i = 0; i < n; ++i)
        w += l[i] + m[i];
    for (std::int64_t u = 0; u < w; ++u)
        ++nu[uniform(rng, 0, n - 1)];
    std::sort(nu.rbegin(), nu.rend());
    return Instance::make(Partition(l), Partition(m), Partition(nu));
}

} // namespace hiveflow

namespace hiveflow {

FlowClass random_flow(const GridPtr& grid, Rng& rng, int max_value)
{
    std::vector<std::int64_t> h(grid->vertex_count());
    for (std::size_t v = 1; v < h.size(); ++v)
        h[v] = uniform(rng, -max_value, max_value);
    return hive_to_flow(HiveLabel{grid, std::move(h)});
}

} // namespace hiveflow
