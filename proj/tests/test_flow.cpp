#include <doctest.h>

#include "support.hpp"

#include "hiveflow/errors.hpp"
#include "hiveflow/properties.hpp"
#include "hiveflow/solver.hpp"

using namespace hiveflow;
using namespace hiveflow::testing;

TEST_CASE("zero flow")
{
    const GridPtr g = new_grid(3);
    const FlowClass z = zero_flow(g);
    CHECK(z.throughputs().size() == 18);
    for (Edge e = 0; e < g->edge_count(); ++e)
        CHECK(z[e] == 0);
    for (RhombusIndex r = 0; r < g->rhombus_count(); ++r)
        CHECK(slack(z, r) == 0);
    CHECK(is_hive_flow(z));
    CHECK(overall_throughput(z) == 0);
    for (const Instance& inst : weight_matched_triples(3, 2)) {
        const Capacities caps = border_capacities(g, inst);
        CHECK(in_B(z, caps));
        CHECK(in_P(z, caps) == (inst.nu.weight() == 0));
    }
}

TEST_CASE("the four slack forms agree and match the hive slack")
{
    Rng rng = make_rng(1);
    for (int n = 2; n <= 5; ++n) {
        const GridPtr g = new_grid(n);
        for (int k = 0; k < 200; ++k) {
            const HiveLabel h{g, [&] {
                                  std::vector<std::int64_t> v(g->vertex_count());
                                  for (std::size_t i = 1; i < v.size(); ++i)
                                      v[i] = static_cast<std::int64_t>(rng() % 41) - 20;
                                  return v;
                              }()};
            const FlowClass f = hive_to_flow(h);
            for (RhombusIndex r = 0; r < g->rhombus_count(); ++r) {
                const auto forms = slack_forms(f, r);
                for (std::int64_t s : forms)
                    CHECK(s == forms[0]);
                CHECK(slack(f, r) == hive_slack(h, r));
            }
        }
    }
}

TEST_CASE("the displayed n = 11 flow is capacity achieving")
{
    const Instance inst = reference_instance();
    const SolveReport r = decide_scaling(inst);
    const FlowClass& f = r.final_flow;
    const Capacities caps = border_capacities(f.grid(), inst);
    CHECK(is_hive_flow(f));
    CHECK(in_B(f, caps));
    CHECK(in_P(f, caps));
    CHECK(overall_throughput(f) == 68);
    const FlatspacePartition part = flatspaces(f);
    for (RhombusIndex r = 0; r < f.g().rhombus_count(); ++r) {
        const Rhombus& rh = f.g().rhombus(r);
        const bool same = part.owner[rh.upright] == part.owner[rh.downright];
        CHECK((slack(f, r) == 0) == same);
    }
}

TEST_CASE("raising one interior label breaks the hive inequalities")
{
    const GridPtr g = new_grid(3);
    HiveLabel h{g, std::vector<std::int64_t>(g->vertex_count(), 0)};
    h.values[TriangleGrid::vertex(2, 1)] = 1;
    const FlowClass f = hive_to_flow(h);
    CHECK(!is_hive_flow(f));
    int negative = 0;
    for (RhombusIndex r = 0; r < g->rhombus_count(); ++r) {
        const Rhombus& rh = g->rhombus(r);
        const Vertex v = TriangleGrid::vertex(2, 1);
        const std::int64_t expect = (rh.left == v || rh.right == v) ? 1 : (rh.top == v || rh.bottom == v) ? -1 : 0;
        CHECK(slack(f, r) == expect);
        negative += expect < 0;
    }
    CHECK(negative == 3);
}

TEST_CASE("membership in B and P")
{
    const Instance inst = Instance::make(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1});
    const GridPtr g = new_grid(inst.n);
    const Capacities caps = border_capacities(g, inst);
    const SolveReport r = decide_plain(inst);
    CHECK(in_P(r.final_flow, caps));
    // halfway along the run the flow is in B but not yet in P
    int seen = 0;
    SolveOptions opts;
    opts.observer = [&](const StepEvent& ev) {
        CHECK(in_B(*ev.after, caps));
        CHECK(overall_throughput(*ev.after) <= inst.nu.weight());
        if (overall_throughput(*ev.after) < inst.nu.weight()) {
            CHECK(!in_P(*ev.after, caps));
            ++seen;
        }
    };
    decide_plain(inst, opts);
    CHECK(seen > 0);
}

TEST_CASE("one augmentation from zero carries one unit")
{
    const Instance inst = Instance::make(Partition{1, 0}, Partition{0, 0}, Partition{1, 0});
    const GridPtr g = new_grid(inst.n);
    const Capacities caps = border_capacities(g, inst);
    const ResidualDigraph Rf = restrict_to_f(build_R(g), zero_flow(g), caps);
    const auto p = shortest_st_turnpath(Rf);
    REQUIRE(p);
    CHECK(overall_throughput(project(g, *p)) == 1);
}

TEST_CASE("unbalanced borders are reported")
{
    const GridPtr g = new_grid(2);
    FlowClass f = zero_flow(g);
    f[TriangleGrid::edge(0, 0, Side::Left)] = -1;
    CHECK_THROWS_AS(overall_throughput(f), InvariantViolation);
}

TEST_CASE("norm and distance")
{
    Rng rng = make_rng(2);
    const GridPtr g = new_grid(4);
    for (int k = 0; k < 100; ++k) {
        const FlowClass a = random_flow(g, rng), b = random_flow(g, rng), c = random_flow(g, rng);
        CHECK(distance(a, a) == 0);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
        std::int64_t l1 = 0;
        for (std::int64_t x : a.throughputs())
            l1 += x < 0 ? -x : x;
        CHECK(norm(a) == l1);
    }
    CHECK_THROWS_AS(distance(zero_flow(new_grid(2)), zero_flow(new_grid(3))), GridMismatch);
}

TEST_CASE("add_scaled is linear")
{
    Rng rng = make_rng(3);
    const GridPtr g = new_grid(4);
    for (int k = 0; k < 100; ++k) {
        const FlowClass f = random_flow(g, rng), d = random_flow(g, rng);
        const std::int64_t s = static_cast<std::int64_t>(rng() % 7) - 3;
        CHECK(add_scaled(f, d, 0) == f);
        CHECK(add_scaled(add_scaled(f, d, s), d, -s) == f);
        const FlowClass sum = add_scaled(f, d, s);
        CHECK(sum.is_closed());
        for (RhombusIndex r = 0; r < g->rhombus_count(); ++r)
            CHECK(slack(sum, r) == slack(f, r) + s * slack(d, r));
    }
    CHECK_THROWS_AS(add_scaled(zero_flow(new_grid(2)), zero_flow(new_grid(3)), 1), GridMismatch);
}

TEST_CASE("hexagon equality on arbitrary flows")
{
    Rng rng = make_rng(4);
    for (int n = 2; n <= 5; ++n) {
        const GridPtr g = new_grid(n);
        for (int k = 0; k < 300; ++k)
            CHECK(hexagon_violations(random_flow(g, rng)) == 0);
    }
}

TEST_CASE("flat trapezoid pairs force the opposite pair flat")
{
    Rng rng = make_rng(5);
    int fired = 0;
    for (int n = 3; n <= 5; ++n) {
        const GridPtr g = new_grid(n);
        for (int k = 0; k < 300; ++k) {
            const FlowClass f = random_hive_flow(g, rng);
            for (Vertex v = 0; v < g->vertex_count(); ++v) {
                if (g->on_boundary(v))
                    continue;
                const auto w = g->ring(v);
                std::array<std::int64_t, 6> s{};
                for (int j = 0; j < 6; ++j)
                    s[j] = slack(f, g->edge_info(g->edge_between(v, w[j])).rhombus);
                for (int a = 0; a < 3; ++a)
                    if (s[(a + 1) % 6] == 0 && s[(a + 2) % 6] == 0) {
                        ++fired;
                        CHECK(s[(a + 4) % 6] == 0);
                        CHECK(s[(a + 5) % 6] == 0);
                    }
            }
        }
    }
    CHECK(fired > 0);
}

TEST_CASE("antipodal contributions accompany negative ones in the support")
{
    Rng rng = make_rng(6);
    for (int n = 2; n <= 4; ++n) {
        const GridPtr g = new_grid(n);
        for (int k = 0; k < 500; ++k) {
            CHECK(antipodal_violations(random_hive_flow(g, rng)) == 0);
            CHECK(antipodal_violations(random_flow(g, rng, 3)) == 0);
        }
    }
}

TEST_CASE("support is the reduced representative")
{
    Rng rng = make_rng(7);
    const GridPtr g = new_grid(4);
    for (int k = 0; k < 200; ++k) {
        const FlowClass f = random_flow(g, rng);
        const auto w = reduced_turn_flow(f);
        for (TurnIndex x = 0; x < g->turn_count(); ++x)
            CHECK(turn_in_support(f, x) == (w[x] > 0));
        CHECK(project(g, w) == f);
    }
}

TEST_CASE("flow decomposition reproduces every throughput")
{
    Rng rng = make_rng(8);
    for (int n = 1; n <= 5; ++n) {
        const GridPtr g = new_grid(n);
        for (int k = 0; k < 100; ++k) {
            const FlowClass f = k % 2 ? random_flow(g, rng) : random_hive_flow(g, rng);
            FlowClass sum = zero_flow(g);
            for (const auto& [weight, turns] : decompose(f)) {
                CHECK(weight > 0);
                TurnPath p{turns, TurnPath::Kind::Cycle};
                sum.add_in_place(project(g, p), weight);
            }
            CHECK(sum == f);
        }
    }
}

TEST_CASE("throughput never exceeds |nu| on B")
{
    for (const Instance& inst : weight_matched_triples(2, 2))
        CHECK(brute_max_throughput(inst) <= inst.nu.weight());
}
