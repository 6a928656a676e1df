#pragma once

#include <set>
#include <utility>
#include <vector>

#include "baassim/entities.hpp"
#include "baassim/event_queue.hpp"
#include "baassim/metrics.hpp"
#include "baassim/policies.hpp"
#include "baassim/ready_queue.hpp"
#include "baassim/types.hpp"
#include "baassim/workload.hpp"

namespace baassim {

struct SimulationResult {
    std::vector<TaskRecord> records;         // one per cloudlet, sorted by cloudlet_id
    std::vector<CloudletId> dispatch_order;  // ids in the order work was started
    TimeMs final_clock_ms = 0;
};

/// One self-contained deterministic run: owns the clock, event queue and
/// ready set, and drives the entity world it was given. Execution is
/// non-preemptive space-shared: a cloudlet holds its VM until completion.
///
/// Event loop: pop the next event, advance the clock, apply it; drain every
/// further event carrying the same timestamp (in seq order); only then run
/// the dispatch phase, which starts work while an idle VM and a ready task
/// both exist. Completions at clock + exec_duration can never land on the
/// current timestamp (durations are >= 1 ms), so one dispatch phase per
/// timestamp is complete.
///
/// A Simulation must not be shared across threads; independent runs are
/// self-contained and may execute in parallel.
class Simulation {
public:
    Simulation(EntityWorld& world, PolicyId policy, HybridParams params);

    /// Runs the workload to completion. The workload must satisfy the
    /// generator invariants (dense ids, arrival order) and every VM must be
    /// idle and unused. Entity errors abort the run.
    SimulationResult run(const std::vector<Cloudlet>& workload);

    TimeMs clock_ms() const { return clock_; }

private:
    void handle(const Event& event);
    void on_arrival(CloudletId id);
    void on_completion(CloudletId id, VmId vm_id);
    void dispatch_ready();

    EntityWorld& world_;
    PolicyId policy_;
    HybridParams params_;

    EventQueue queue_;
    ReadyQueue ready_;
    std::set<std::pair<TimeMs, VmId>> idle_vms_;  // least-loaded assignment order
    TimeMs clock_ = 0;
    bool dispatched_any_ = false;

    const std::vector<Cloudlet>* cloudlets_ = nullptr;  // indexed by cloudlet_id
    std::vector<TaskRecord> records_;
    std::vector<CloudletId> dispatch_order_;
};

}  // namespace baassim
