#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "baassim/errors.hpp"
#include "baassim/ready_queue.hpp"
#include "baassim/workload.hpp"
#include "test_support.hpp"

using namespace baassim;
using testutil::make_task;

TEST_CASE("ready queue matches the pure selectors through a random op stream") {
    // Differential test: for every policy, drive a ReadyQueue and a plain
    // vector through the same inserts/erases and require identical choices.
    const HybridParams variants[] = {
        {kInfiniteQuantum, 8}, {20000, 8}, {1, 8}, {500, 3}, {100000, 16},
    };
    for (const PolicyId policy :
         {PolicyId::Fcfs, PolicyId::Sjf, PolicyId::Priority, PolicyId::Hybrid}) {
        for (const HybridParams& params : variants) {
            Prng rng(7000 + static_cast<std::uint64_t>(policy) * 31 +
                     static_cast<std::uint64_t>(params.priority_levels));
            ReadyQueue queue(policy, params);
            std::vector<ReadyTask> reference;
            TimeMs now = 0;
            CloudletId next_id = 0;

            for (int step = 0; step < 600; ++step) {
                const auto pick = rng.uniform(0, 99);
                if (pick < 45 || reference.empty()) {
                    ReadyTask t = make_task(next_id++, rng.uniform(1, 50), now,
                                            static_cast<int>(rng.uniform(0, params.priority_levels - 1)));
                    queue.insert(t, now);
                    reference.push_back(t);
                } else if (pick < 75) {
                    now += rng.uniform(0, 30000);
                } else {
                    std::optional<CloudletId> expected;
                    switch (policy) {
                        case PolicyId::Fcfs: expected = select_fcfs(reference); break;
                        case PolicyId::Sjf: expected = select_sjf(reference); break;
                        case PolicyId::Priority: expected = select_priority(reference); break;
                        case PolicyId::Hybrid: expected = select_hybrid(reference, now, params); break;
                    }
                    const auto actual = queue.select(now);
                    REQUIRE(actual == expected);
                    if (actual) {
                        queue.erase(*actual);
                        std::erase_if(reference,
                                      [&](const ReadyTask& t) { return t.cloudlet_id == *actual; });
                    }
                }
                REQUIRE(queue.size() == reference.size());
            }
        }
    }
}

TEST_CASE("select on an empty queue returns nothing") {
    ReadyQueue queue(PolicyId::Hybrid, HybridParams{});
    CHECK_FALSE(queue.select(0).has_value());
    queue.insert(make_task(0, 10), 0);
    queue.erase(0);
    CHECK_FALSE(queue.select(100).has_value());
    CHECK(queue.empty());
}

TEST_CASE("duplicate insert and unknown erase are rejected") {
    ReadyQueue queue(PolicyId::Sjf, HybridParams{});
    queue.insert(make_task(1, 10), 0);
    CHECK_THROWS_AS(queue.insert(make_task(1, 20), 0), SimError);
    CHECK_THROWS_AS(queue.erase(9), SimError);
}

TEST_CASE("hybrid rejects priorities outside the configured levels") {
    ReadyQueue queue(PolicyId::Hybrid, HybridParams{20000, 4});
    CHECK_THROWS_AS(queue.insert(make_task(0, 10, 0, 4), 0), SimError);
    CHECK(queue.empty());
}

TEST_CASE("aging promotes a task between selects without new events") {
    ReadyQueue queue(PolicyId::Hybrid, HybridParams{1000, 8});
    queue.insert(make_task(0, 50, 0, 3), 0);   // long, low priority
    queue.insert(make_task(1, 99, 0, 0), 0);   // longer, top priority
    CHECK(queue.select(0) == 1);
    CHECK(queue.select(2999) == 1);  // two quanta: task 0 at level 1
    CHECK(queue.select(3000) == 0);  // three quanta: level 0, shorter wins
}
