#pragma once

#include "hiveflow/flow.hpp"
#include "hiveflow/residual.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hiveflow {

enum class Algorithm { Plain, Scaling };
const char* algorithm_name(Algorithm a);

struct StepEvent {
    int ell = 0;
    const FlowClass* before = nullptr;
    const TurnPath* path = nullptr;
    const FlowClass* after = nullptr;
};

struct SolveOptions {
    /// Full membership check in B after every augmentation (always on in debug builds).
    bool check_each_step = false;
    std::function<void(const StepEvent&)> observer;
};

struct SolveReport {
    bool positive = false;
    FlowClass final_flow;
    std::int64_t throughput = 0;
    std::int64_t target = 0;
    int n = 1;
    Algorithm algorithm = Algorithm::Scaling;
    std::vector<std::int64_t> augmentations_per_phase;
    std::vector<int> phase_exponents;
    std::vector<std::int64_t> throughput_after_phase;
    std::int64_t bfs_calls = 0;
    /// nu_1 < max(lambda_1, mu_1): answered without running.
    bool precondition_failed = false;

    std::int64_t total_augmentations() const;
};

SolveReport decide_plain(const Instance& inst, const SolveOptions& opts = {});
SolveReport decide_scaling(const Instance& inst, const SolveOptions& opts = {});
SolveReport decide(const Instance& inst, Algorithm a, const SolveOptions& opts = {});

/// ceil(log2 v) for v >= 1.
int ceil_log2(std::int64_t v);

/// Independent recheck of closedness, slacks, border bounds and the verdict.
bool verify_certificate(const SolveReport& report, const Capacities& caps);

/// Bounds of the scaling analysis, evaluated on a finished report.
struct PhaseBoundCheck {
    bool later_phases_ok = true;   // every phase after the first <= 6n
    bool total_ok = true;          // total <= 6n ceil(log2 nu_1) + 1
    bool gap_ok = true;            // |nu| - delta < 3n 2^ell after each phase (positive runs)
    std::string detail;
};
PhaseBoundCheck check_phase_bounds(const SolveReport& report, const Instance& inst);

} // namespace hiveflow
