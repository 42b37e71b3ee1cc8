#include "cli.hpp"

#include "hiveflow/enumerate.hpp"
#include "hiveflow/io.hpp"
#include "hiveflow/lr_oracle.hpp"
#include "hiveflow/properties.hpp"
#include "hiveflow/random.hpp"
#include "hiveflow/solver.hpp"

#include <ostream>

namespace hiveflow::cli {

int selftest(std::ostream& out, std::ostream& err)
{
    const std::uint64_t seed = seed_from_env(20240601);
    Rng rng(seed);
    ordered_json checks = ordered_json::object();
    int failures = 0;
    const auto record = [&](const char* name, int bad, int total) {
        checks[name] = {{"checked", total}, {"violations", bad}};
        failures += bad;
        if (bad)
            err << name << ": " << bad << " violations\n";
    };

    // small oracle sweep, n <= 2
    int bad = 0, total = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= 3; ++c)
                for (int d = 0; d <= c; ++d)
                    for (int e = 0; e <= 6; ++e) {
                        const int w = a + b + c + d - e;
                        if (w < 0 || w > e)
                            continue;
                        const Partition l{a, b}, m{c, d}, nu{e, w};
                        const Instance inst = Instance::make(l, m, nu);
                        const std::uint64_t want = lr_count(l, m, nu);
                        bad += decide_scaling(inst).positive != (want > 0);
                        bad += count_P(inst) != want;
                        ++total;
                    }
    record("oracle", bad, total);

    bad = 0, total = 0;
    int antipodal_bad = 0;
    for (int n = 2; n <= 4; ++n) {
        const GridPtr g = new_grid(n);
        for (int k = 0; k < 200; ++k, ++total) {
            const FlowClass f = random_hive_flow(g, rng);
            bad += hexagon_violations(f) + hexagon_violations(random_flow(g, rng));
            antipodal_bad += antipodal_violations(f);
        }
    }
    record("hexagon", bad, total);
    record("antipodal", antipodal_bad, total);

    bad = 0, total = 0;
    for (int k = 0; k < 100; ++k, ++total) {
        const Instance inst = random_lowered_triple(1 + k % 5, 6, rng);
        const SolveReport r = decide_scaling(inst);
        const FlowClass back = flow_from_json(ordered_json::parse(report_to_json(r).dump()));
        SolveReport copy = r;
        copy.final_flow = back;
        bad += !(back == r.final_flow) || !verify_certificate(copy, border_capacities(back.grid(), inst));
    }
    record("certificate_roundtrip", bad, total);

    ordered_json j;
    j["selftest"] = failures ? "fail" : "pass";
    j["seed"] = seed;
    j["checks"] = checks;
    out << j.dump(2) << '\n';
    return failures ? NotPositive : Ok;
}

} // namespace hiveflow::cli
