#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "baassim/entities.hpp"
#include "baassim/types.hpp"

namespace baassim {

enum class PolicyId { Fcfs, Sjf, Priority, Hybrid };

/// Fixed reporting order for comparison outputs.
inline constexpr PolicyId kPolicyOrder[] = {PolicyId::Fcfs, PolicyId::Sjf, PolicyId::Priority,
                                            PolicyId::Hybrid};

/// Case-insensitive; throws ConfigError on anything but fcfs|sjf|priority|hybrid.
PolicyId parse_policy(std::string_view name);
std::string_view policy_name(PolicyId policy);

/// Sentinel aging quantum: aging disabled, tasks keep their submitted priority.
inline constexpr TimeMs kInfiniteQuantum = std::numeric_limits<TimeMs>::max();

struct HybridParams {
    TimeMs aging_quantum_ms = 20000;
    int priority_levels = 8;  // priorities lie in [0, priority_levels - 1], 0 is best
};

/// A cloudlet that has arrived and neither started nor finished.
struct ReadyTask {
    CloudletId cloudlet_id = 0;
    TimeMs arrival_ms = 0;
    std::int64_t length_mi = 1;
    int priority = 0;
    UserId user_id = 0;
};

/// Linear aging: a waiting task gains one priority level per full quantum
/// waited, clamped at 0 (the best level). With kInfiniteQuantum the
/// submitted priority is returned unchanged.
inline int effective_priority(int priority, TimeMs arrival_ms, TimeMs now_ms,
                              TimeMs aging_quantum_ms) {
    assert(now_ms >= arrival_ms);
    if (aging_quantum_ms == kInfiniteQuantum) {
        return priority;
    }
    const TimeMs steps = (now_ms - arrival_ms) / aging_quantum_ms;
    if (steps >= priority) {
        return 0;
    }
    return priority - static_cast<int>(steps);
}

// Selection rules. Each returns the member of `ready` with the minimal key
// listed below, or nothing when the set is empty. Every key ends in
// cloudlet_id, so selection is a total order: deterministic and invariant
// under permutation of the input.
//
//   fcfs      (arrival_ms, cloudlet_id)
//   sjf       (length_mi, arrival_ms, cloudlet_id)
//   priority  (priority, arrival_ms, cloudlet_id)
//   hybrid    (effective_priority, length_mi, arrival_ms, cloudlet_id)

std::optional<CloudletId> select_fcfs(std::span<const ReadyTask> ready);
std::optional<CloudletId> select_sjf(std::span<const ReadyTask> ready);
std::optional<CloudletId> select_priority(std::span<const ReadyTask> ready);
std::optional<CloudletId> select_hybrid(std::span<const ReadyTask> ready, TimeMs now_ms,
                                        const HybridParams& params);

/// Least-loaded rule: the idle VM with minimal (total_busy_ms, vm_id).
/// Throws SimError on an empty list.
VmId assign_vm(std::span<const VmState> idle_vms);

}  // namespace baassim
