#include "baassim/event_queue.hpp"

#include <string>

#include "baassim/errors.hpp"

namespace baassim {

Event EventQueue::push(TimeMs time_ms, EventType type, CloudletId cloudlet_id, VmId vm_id) {
    if (time_ms < floor_) {
        throw SimError("event at t=" + std::to_string(time_ms) +
                       " is earlier than the clock t=" + std::to_string(floor_));
    }
    Event ev;
    ev.time_ms = time_ms;
    ev.seq = next_seq_++;
    ev.type = type;
    ev.cloudlet_id = cloudlet_id;
    ev.vm_id = vm_id;
    heap_.push(ev);
    return ev;
}

std::optional<Event> EventQueue::pop() {
    if (heap_.empty()) {
        return std::nullopt;
    }
    Event ev = heap_.top();
    heap_.pop();
    floor_ = ev.time_ms;  // nondecreasing by heap order
    return ev;
}

std::optional<TimeMs> EventQueue::next_time() const {
    if (heap_.empty()) {
        return std::nullopt;
    }
    return heap_.top().time_ms;
}

}  // namespace baassim
