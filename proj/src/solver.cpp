#include "hiveflow/solver.hpp"

#include "hiveflow/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hiveflow {

const char* algorithm_name(Algorithm a)
{
    return a == Algorithm::Plain ? "plain" : "scaling";
}

std::int64_t SolveReport::total_augmentations() const
{
    return std::accumulate(augmentations_per_phase.begin(), augmentations_per_phase.end(), std::int64_t{0});
}

int ceil_log2(std::int64_t v)
{
    int l = 0;
    while ((std::int64_t{1} << l) < v)
        ++l;
    return l;
}

namespace {

#ifdef NDEBUG
constexpr bool debug_build = false;
#else
constexpr bool debug_build = true;
#endif

// Adds 2^ell pi(p) in place, touching only the upright turns of p.
void augment(FlowClass& f, const TriangleGrid& g, const TurnPath& p, std::int64_t amount)
{
    for (TurnIndex x : p.turns) {
        const TurnInfo& t = g.turn(x);
        if (!g.is_upright(t.triangle))
            continue;
        f[t.in_edge] += amount;
        f[t.out_edge] -= amount;
    }
}

// One phase: augment along shortest paths of R_f^ell (ell < 0 means R_f) until none remain.
std::int64_t run_phase(FlowClass& f, const Capacities& caps, ResidualDigraph& D, BfsScratch& scratch, int ell,
                       SolveReport& report, const SolveOptions& opts)
{
    const TriangleGrid& g = *caps.grid;
    const std::int64_t amount = ell < 0 ? 1 : std::int64_t{1} << ell;
    std::int64_t count = 0;
    for (;;) {
        D.refresh(f, caps, ell);
        ++report.bfs_calls;
        const auto path = shortest_st_turnpath(D, &scratch);
        if (!path)
            break;
        FlowClass before;
        if (opts.observer)
            before = f;
        augment(f, g, *path, amount);
        ++count;
        if (!within_border_bounds(f, caps))
            throw InvariantViolation("augmentation left the border capacities");
        if ((debug_build || opts.check_each_step) && !(f.is_closed() && is_hive_flow(f)))
            throw InvariantViolation("augmentation left the set of hive flows");
        if (opts.observer)
            opts.observer(StepEvent{std::max(ell, 0), &before, &*path, &f});
    }
    return count;
}

SolveReport start_report(const Instance& inst, Algorithm a, const GridPtr& grid)
{
    SolveReport report;
    report.algorithm = a;
    report.n = inst.n;
    report.target = inst.nu.weight();
    report.final_flow = zero_flow(grid);
    return report;
}

void finish(SolveReport& report)
{
    report.throughput = overall_throughput(report.final_flow);
    report.positive = report.throughput == report.target;
}

} // namespace

SolveReport decide_plain(const Instance& inst, const SolveOptions& opts)
{
    const GridPtr grid = new_grid(inst.n);
    const Capacities caps = border_capacities(grid, inst);
    SolveReport report = start_report(inst, Algorithm::Plain, grid);
    ResidualDigraph D = build_R(grid);
    BfsScratch scratch;
    report.phase_exponents.push_back(0);
    report.augmentations_per_phase.push_back(run_phase(report.final_flow, caps, D, scratch, -1, report, opts));
    report.throughput_after_phase.push_back(overall_throughput(report.final_flow));
    finish(report);
    return report;
}

SolveReport decide_scaling(const Instance& inst, const SolveOptions& opts)
{
    const GridPtr grid = new_grid(inst.n);
    const Capacities caps = border_capacities(grid, inst);
    SolveReport report = start_report(inst, Algorithm::Scaling, grid);
    if (report.target == 0) {
        finish(report);
        return report;
    }
    if (inst.nu[0] < std::max(inst.lambda[0], inst.mu[0])) {
        report.precondition_failed = true;
        finish(report);
        return report;
    }
    ResidualDigraph D = build_R(grid);
    BfsScratch scratch;
    for (int ell = ceil_log2(inst.nu[0]); ell >= 0; --ell) {
        report.phase_exponents.push_back(ell);
        report.augmentations_per_phase.push_back(run_phase(report.final_flow, caps, D, scratch, ell, report, opts));
        report.throughput_after_phase.push_back(overall_throughput(report.final_flow));
    }
    finish(report);

    const PhaseBoundCheck bounds = check_phase_bounds(report, inst);
    if (!bounds.later_phases_ok || !bounds.gap_ok)
        throw InvariantViolation("scaling bound violated: " + bounds.detail);
    return report;
}

SolveReport decide(const Instance& inst, Algorithm a, const SolveOptions& opts)
{
    return a == Algorithm::Plain ? decide_plain(inst, opts) : decide_scaling(inst, opts);
}

PhaseBoundCheck check_phase_bounds(const SolveReport& report, const Instance& inst)
{
    PhaseBoundCheck c;
    if (report.algorithm != Algorithm::Scaling || report.phase_exponents.empty())
        return c;
    const std::int64_t six_n = 6 * static_cast<std::int64_t>(inst.n);
    for (std::size_t i = 1; i < report.augmentations_per_phase.size(); ++i) {
        if (report.augmentations_per_phase[i] > six_n) {
            c.later_phases_ok = false;
            c.detail += "phase 2^" + std::to_string(report.phase_exponents[i]) + " used " +
                        std::to_string(report.augmentations_per_phase[i]) + " augmentations; ";
        }
    }
    const std::int64_t total_bound = six_n * ceil_log2(inst.nu[0]) + 1;
    if (report.total_augmentations() > total_bound) {
        c.total_ok = false;
        c.detail += "total " + std::to_string(report.total_augmentations()) + " exceeds " +
                    std::to_string(total_bound) + "; ";
    }
    if (report.positive) {
        const std::int64_t three_n = 3 * static_cast<std::int64_t>(inst.n);
        for (std::size_t i = 0; i < report.phase_exponents.size(); ++i) {
            const std::int64_t gap = report.target - report.throughput_after_phase[i];
            if (gap >= three_n << report.phase_exponents[i]) {
                c.gap_ok = false;
                c.detail += "gap " + std::to_string(gap) + " after phase 2^" +
                            std::to_string(report.phase_exponents[i]) + "; ";
            }
        }
    }
    return c;
}

bool verify_certificate(const SolveReport& report, const Capacities& caps)
{
    const FlowClass& f = report.final_flow;
    if (!f.grid() || f.grid() != caps.grid)
        return false;
    if (!f.is_closed() || !is_hive_flow(f) || !within_border_bounds(f, caps))
        return false;
    std::int64_t through = 0;
    try {
        through = overall_throughput(f);
    } catch (const InvariantViolation&) {
        return false;
    }
    if (through != report.throughput || report.target != caps.target)
        return false;
    return report.positive == (through == caps.target);
}

} // namespace hiveflow
