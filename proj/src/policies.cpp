#include "baassim/policies.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "baassim/errors.hpp"

namespace baassim {

PolicyId parse_policy(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "fcfs") return PolicyId::Fcfs;
    if (lower == "sjf") return PolicyId::Sjf;
    if (lower == "priority") return PolicyId::Priority;
    if (lower == "hybrid") return PolicyId::Hybrid;
    throw ConfigError("unknown policy: " + std::string(name));
}

std::string_view policy_name(PolicyId policy) {
    switch (policy) {
        case PolicyId::Fcfs: return "fcfs";
        case PolicyId::Sjf: return "sjf";
        case PolicyId::Priority: return "priority";
        case PolicyId::Hybrid: return "hybrid";
    }
    throw SimError("invalid policy id");
}

std::optional<CloudletId> select_fcfs(std::span<const ReadyTask> ready) {
    const ReadyTask* best = nullptr;
    for (const ReadyTask& t : ready) {
        if (best == nullptr ||
            std::tie(t.arrival_ms, t.cloudlet_id) < std::tie(best->arrival_ms, best->cloudlet_id)) {
            best = &t;
        }
    }
    return best ? std::optional<CloudletId>(best->cloudlet_id) : std::nullopt;
}

std::optional<CloudletId> select_sjf(std::span<const ReadyTask> ready) {
    const ReadyTask* best = nullptr;
    for (const ReadyTask& t : ready) {
        if (best == nullptr || std::tie(t.length_mi, t.arrival_ms, t.cloudlet_id) <
                                   std::tie(best->length_mi, best->arrival_ms, best->cloudlet_id)) {
            best = &t;
        }
    }
    return best ? std::optional<CloudletId>(best->cloudlet_id) : std::nullopt;
}

std::optional<CloudletId> select_priority(std::span<const ReadyTask> ready) {
    const ReadyTask* best = nullptr;
    for (const ReadyTask& t : ready) {
        if (best == nullptr || std::tie(t.priority, t.arrival_ms, t.cloudlet_id) <
                                   std::tie(best->priority, best->arrival_ms, best->cloudlet_id)) {
            best = &t;
        }
    }
    return best ? std::optional<CloudletId>(best->cloudlet_id) : std::nullopt;
}

std::optional<CloudletId> select_hybrid(std::span<const ReadyTask> ready, TimeMs now_ms,
                                        const HybridParams& params) {
    const ReadyTask* best = nullptr;
    int best_eff = 0;
    for (const ReadyTask& t : ready) {
        const int eff = effective_priority(t.priority, t.arrival_ms, now_ms, params.aging_quantum_ms);
        if (best == nullptr || std::tie(eff, t.length_mi, t.arrival_ms, t.cloudlet_id) <
                                   std::tie(best_eff, best->length_mi, best->arrival_ms,
                                            best->cloudlet_id)) {
            best = &t;
            best_eff = eff;
        }
    }
    return best ? std::optional<CloudletId>(best->cloudlet_id) : std::nullopt;
}

VmId assign_vm(std::span<const VmState> idle_vms) {
    if (idle_vms.empty()) {
        throw SimError("assign_vm: no idle VM available");
    }
    const VmState* best = &idle_vms.front();
    for (const VmState& vm : idle_vms.subspan(1)) {
        if (std::tie(vm.total_busy_ms, vm.spec.vm_id) <
            std::tie(best->total_busy_ms, best->spec.vm_id)) {
            best = &vm;
        }
    }
    return best->spec.vm_id;
}

}  // namespace baassim
