#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "baassim/types.hpp"

namespace baassim {

enum class EventType { CloudletArrival, CloudletCompletion };

struct Event {
    TimeMs time_ms = 0;
    std::uint64_t seq = 0;  // insertion counter; breaks timestamp ties FIFO
    EventType type = EventType::CloudletArrival;
    CloudletId cloudlet_id = 0;
    VmId vm_id = -1;  // CloudletCompletion only
};

/// Totally ordered pending-event set: pop order is (time_ms, seq) ascending.
/// The queue tracks the time of the last popped event; pushing anything
/// earlier is a causality bug and throws SimError.
class EventQueue {
public:
    /// Assigns the next seq value and enqueues. Returns the stored event.
    Event push(TimeMs time_ms, EventType type, CloudletId cloudlet_id, VmId vm_id = -1);

    /// Removes and returns the minimal (time_ms, seq) event; nothing when empty.
    std::optional<Event> pop();

    std::optional<TimeMs> next_time() const;
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    TimeMs floor_ms() const { return floor_; }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const {
            return std::tie(a.time_ms, a.seq) > std::tie(b.time_ms, b.seq);
        }
    };

    std::priority_queue<Event, std::vector<Event>, Later> heap_;
    std::uint64_t next_seq_ = 0;
    TimeMs floor_ = 0;
};

}  // namespace baassim
