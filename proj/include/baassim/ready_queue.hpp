#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "baassim/policies.hpp"
#include "baassim/types.hpp"

namespace baassim {

/// Incremental ready set with exactly the selection order of the pure
/// select_* functions, but O(log n) per operation so runs with 10^6 tasks
/// stay fast.
///
/// fcfs/sjf/priority keep one ordered set of static keys. hybrid keeps one
/// bucket per effective priority level, each ordered by (length, arrival,
/// id); a task's level only changes at the known instants arrival + k*q, so
/// re-bucketing is driven lazily from a min-heap of pending transitions and
/// each task moves at most priority_levels times in its lifetime.
class ReadyQueue {
public:
    ReadyQueue(PolicyId policy, HybridParams params);

    void insert(const ReadyTask& task, TimeMs now_ms);
    void erase(CloudletId id);

    /// Best task at now_ms per the policy key; does not remove it.
    /// For hybrid this first applies all aging transitions due by now_ms.
    std::optional<CloudletId> select(TimeMs now_ms);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    bool contains(CloudletId id) const { return entries_.count(id) != 0; }

private:
    // Last element is always cloudlet_id, keeping the order total.
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

    struct Entry {
        ReadyTask task;
        int level = 0;  // hybrid only: current effective priority bucket
    };

    Key static_key(const ReadyTask& t) const;
    static Key bucket_key(const ReadyTask& t) {
        return {t.length_mi, t.arrival_ms, t.cloudlet_id};
    }

    void age_to(TimeMs now_ms);
    void schedule_transition(const ReadyTask& t, int level);
    void move_bucket(Entry& entry, int new_level);

    PolicyId policy_;
    HybridParams params_;
    std::unordered_map<CloudletId, Entry> entries_;

    std::set<Key> ordered_;  // fcfs / sjf / priority

    std::vector<std::set<Key>> buckets_;  // hybrid, indexed by effective level
    std::set<int> nonempty_levels_;
    std::priority_queue<std::pair<TimeMs, CloudletId>,
                        std::vector<std::pair<TimeMs, CloudletId>>,
                        std::greater<>>
        aging_;  // stale entries for dispatched tasks are skipped on pop
};

}  // namespace baassim
