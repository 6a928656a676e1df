#include "baassim/engine.hpp"

#include <algorithm>
#include <string>

#include "baassim/errors.hpp"

namespace baassim {

Simulation::Simulation(EntityWorld& world, PolicyId policy, HybridParams params)
    : world_(world), policy_(policy), params_(params), ready_(policy, params) {}

SimulationResult Simulation::run(const std::vector<Cloudlet>& workload) {
    validate_workload(workload);
    for (const Cloudlet& c : workload) {
        if (c.priority >= params_.priority_levels) {
            throw ConfigError("cloudlet " + std::to_string(c.cloudlet_id) + ": priority " +
                              std::to_string(c.priority) + " outside [0, " +
                              std::to_string(params_.priority_levels) + ")");
        }
    }
    if (world_.vms.empty()) {
        throw SimError("run: the entity world has no VMs");
    }
    for (const VmState& vm : world_.vms) {
        if (!vm.idle() || vm.busy_until_ms != 0 || vm.total_busy_ms != 0) {
            throw SimError("run: VM " + std::to_string(vm.spec.vm_id) + " is not a fresh idle VM");
        }
    }
    if (!workload.empty() && world_.cis.chains().empty()) {
        throw SimError("run: no blockchains prepared");
    }

    cloudlets_ = &workload;
    records_.clear();
    records_.reserve(workload.size());
    dispatch_order_.clear();
    dispatch_order_.reserve(workload.size());

    idle_vms_.clear();
    for (const VmState& vm : world_.vms) {
        idle_vms_.emplace(vm.total_busy_ms, vm.spec.vm_id);
    }

    for (const Cloudlet& c : workload) {
        queue_.push(c.arrival_ms, EventType::CloudletArrival, c.cloudlet_id);
    }

    while (auto ev = queue_.pop()) {
        clock_ = ev->time_ms;
        handle(*ev);
        // Drain every event sharing this timestamp before dispatching, so
        // simultaneous arrivals compete and freed VMs rejoin the idle pool.
        while (queue_.next_time() && *queue_.next_time() == clock_) {
            handle(*queue_.pop());
        }
        dispatch_ready();
    }

    if (!ready_.empty()) {
        throw SimError("run: ready set not empty at end of run");
    }
    for (const VmState& vm : world_.vms) {
        if (!vm.idle()) {
            throw SimError("run: VM " + std::to_string(vm.spec.vm_id) + " still busy at end of run");
        }
    }
    if (world_.leases.acquired_count() != world_.leases.released_count() ||
        world_.leases.acquired_count() != static_cast<std::int64_t>(workload.size())) {
        throw SimError("run: lease balance violated");
    }

    SimulationResult result;
    std::sort(records_.begin(), records_.end(), [](const TaskRecord& a, const TaskRecord& b) {
        return a.cloudlet_id < b.cloudlet_id;
    });
    result.records = std::move(records_);
    result.dispatch_order = std::move(dispatch_order_);
    result.final_clock_ms = clock_;
    return result;
}

void Simulation::handle(const Event& event) {
    switch (event.type) {
        case EventType::CloudletArrival:
            on_arrival(event.cloudlet_id);
            return;
        case EventType::CloudletCompletion:
            on_completion(event.cloudlet_id, event.vm_id);
            return;
    }
    throw SimError("unknown event type");
}

void Simulation::on_arrival(CloudletId id) {
    const Cloudlet& c = (*cloudlets_)[static_cast<std::size_t>(id)];
    ready_.insert(ReadyTask{c.cloudlet_id, c.arrival_ms, c.length_mi, c.priority, c.user_id},
                  clock_);
}

void Simulation::on_completion(CloudletId id, VmId vm_id) {
    if (vm_id < 0 || vm_id >= static_cast<VmId>(world_.vms.size())) {
        throw SimError("completion for unknown VM " + std::to_string(vm_id));
    }
    VmState& vm = world_.vms[static_cast<std::size_t>(vm_id)];
    if (!vm.current_cloudlet || *vm.current_cloudlet != id) {
        throw SimError("completion for cloudlet " + std::to_string(id) + " on VM " +
                       std::to_string(vm_id) + " which is not running it");
    }
    world_.leases.release(world_.leases.active_lease_for(id), clock_);
    vm.current_cloudlet.reset();
    vm.busy_until_ms = 0;
    idle_vms_.emplace(vm.total_busy_ms, vm.spec.vm_id);
}

void Simulation::dispatch_ready() {
    while (!idle_vms_.empty() && !ready_.empty()) {
        const CloudletId chosen = *ready_.select(clock_);
        const auto slot = idle_vms_.begin();  // minimal (total_busy_ms, vm_id)
        const VmId vm_id = slot->second;
        idle_vms_.erase(slot);

        VmState& vm = world_.vms[static_cast<std::size_t>(vm_id)];
        const Cloudlet& c = (*cloudlets_)[static_cast<std::size_t>(chosen)];
        const TimeMs duration = exec_duration_ms(c, vm.spec);
        const ChainId chain = static_cast<ChainId>(
            c.cloudlet_id % static_cast<std::int64_t>(world_.cis.chains().size()));
        world_.leases.acquire(world_.cis, c.user_id, c.cloudlet_id, vm_id, chain, clock_);
        if (!dispatched_any_) {
            world_.handshake_log.push_back(HandshakeStep::FirstDispatch);
            dispatched_any_ = true;
        }

        vm.current_cloudlet = c.cloudlet_id;
        vm.busy_until_ms = clock_ + duration;
        vm.total_busy_ms += duration;

        ready_.erase(chosen);
        records_.push_back(TaskRecord{c.cloudlet_id, c.user_id, vm_id, c.priority, c.length_mi,
                                      c.arrival_ms, clock_, clock_ + duration});
        dispatch_order_.push_back(c.cloudlet_id);
        queue_.push(clock_ + duration, EventType::CloudletCompletion, c.cloudlet_id, vm_id);
    }
}

}  // namespace baassim
