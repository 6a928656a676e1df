#include "baassim/ready_queue.hpp"

#include <limits>
#include <string>

#include "baassim/errors.hpp"

namespace baassim {

ReadyQueue::ReadyQueue(PolicyId policy, HybridParams params)
    : policy_(policy), params_(params) {
    if (policy_ == PolicyId::Hybrid) {
        if (params_.priority_levels < 1) {
            throw SimError("ReadyQueue: priority_levels must be >= 1");
        }
        if (params_.aging_quantum_ms < 1) {
            throw SimError("ReadyQueue: aging_quantum_ms must be >= 1");
        }
        buckets_.resize(static_cast<std::size_t>(params_.priority_levels));
    }
}

ReadyQueue::Key ReadyQueue::static_key(const ReadyTask& t) const {
    switch (policy_) {
        case PolicyId::Fcfs:
            return {t.arrival_ms, t.cloudlet_id, t.cloudlet_id};
        case PolicyId::Sjf:
            return {t.length_mi, t.arrival_ms, t.cloudlet_id};
        case PolicyId::Priority:
            return {t.priority, t.arrival_ms, t.cloudlet_id};
        case PolicyId::Hybrid:
            break;
    }
    throw SimError("static_key: not a static-ordered policy");
}

void ReadyQueue::schedule_transition(const ReadyTask& t, int level) {
    // Next decrement fires when the (priority - level + 1)-th quantum elapses.
    const __int128 when = static_cast<__int128>(t.arrival_ms) +
                          static_cast<__int128>(t.priority - level + 1) *
                              static_cast<__int128>(params_.aging_quantum_ms);
    if (when <= static_cast<__int128>(std::numeric_limits<TimeMs>::max())) {
        aging_.emplace(static_cast<TimeMs>(when), t.cloudlet_id);
    }
}

void ReadyQueue::move_bucket(Entry& entry, int new_level) {
    auto& from = buckets_[static_cast<std::size_t>(entry.level)];
    from.erase(bucket_key(entry.task));
    if (from.empty()) {
        nonempty_levels_.erase(entry.level);
    }
    buckets_[static_cast<std::size_t>(new_level)].insert(bucket_key(entry.task));
    nonempty_levels_.insert(new_level);
    entry.level = new_level;
}

void ReadyQueue::age_to(TimeMs now_ms) {
    while (!aging_.empty() && aging_.top().first <= now_ms) {
        const CloudletId id = aging_.top().second;
        aging_.pop();
        const auto it = entries_.find(id);
        if (it == entries_.end()) {
            continue;  // dispatched before its transition fired
        }
        Entry& entry = it->second;
        const int level = effective_priority(entry.task.priority, entry.task.arrival_ms, now_ms,
                                             params_.aging_quantum_ms);
        if (level != entry.level) {
            move_bucket(entry, level);
        }
        if (level > 0) {
            schedule_transition(entry.task, level);
        }
    }
}

void ReadyQueue::insert(const ReadyTask& task, TimeMs now_ms) {
    const auto [it, fresh] = entries_.emplace(task.cloudlet_id, Entry{task, 0});
    if (!fresh) {
        throw SimError("ReadyQueue: cloudlet " + std::to_string(task.cloudlet_id) +
                       " already in the ready set");
    }
    if (policy_ == PolicyId::Hybrid) {
        if (task.priority < 0 || task.priority >= params_.priority_levels) {
            entries_.erase(it);
            throw SimError("ReadyQueue: priority " + std::to_string(task.priority) +
                           " outside [0, " + std::to_string(params_.priority_levels) + ")");
        }
        const int level = effective_priority(task.priority, task.arrival_ms, now_ms,
                                             params_.aging_quantum_ms);
        it->second.level = level;
        buckets_[static_cast<std::size_t>(level)].insert(bucket_key(task));
        nonempty_levels_.insert(level);
        if (level > 0 && params_.aging_quantum_ms != kInfiniteQuantum) {
            schedule_transition(task, level);
        }
    } else {
        ordered_.insert(static_key(task));
    }
}

void ReadyQueue::erase(CloudletId id) {
    const auto it = entries_.find(id);
    if (it == entries_.end()) {
        throw SimError("ReadyQueue: cloudlet " + std::to_string(id) + " not in the ready set");
    }
    if (policy_ == PolicyId::Hybrid) {
        auto& bucket = buckets_[static_cast<std::size_t>(it->second.level)];
        bucket.erase(bucket_key(it->second.task));
        if (bucket.empty()) {
            nonempty_levels_.erase(it->second.level);
        }
    } else {
        ordered_.erase(static_key(it->second.task));
    }
    entries_.erase(it);
}

std::optional<CloudletId> ReadyQueue::select(TimeMs now_ms) {
    if (policy_ == PolicyId::Hybrid && params_.aging_quantum_ms != kInfiniteQuantum) {
        age_to(now_ms);
    }
    if (entries_.empty()) {
        return std::nullopt;
    }
    if (policy_ == PolicyId::Hybrid) {
        const int level = *nonempty_levels_.begin();
        return std::get<2>(*buckets_[static_cast<std::size_t>(level)].begin());
    }
    return std::get<2>(*ordered_.begin());
}

}  // namespace baassim
