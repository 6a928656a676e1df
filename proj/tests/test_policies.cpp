#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "baassim/errors.hpp"
#include "baassim/policies.hpp"
#include "baassim/workload.hpp"
#include "test_support.hpp"

using namespace baassim;
using testutil::make_task;

TEST_CASE("policy names parse case-insensitively") {
    CHECK(parse_policy("fcfs") == PolicyId::Fcfs);
    CHECK(parse_policy("SJF") == PolicyId::Sjf);
    CHECK(parse_policy("Priority") == PolicyId::Priority);
    CHECK(parse_policy("HyBrId") == PolicyId::Hybrid);
    CHECK_THROWS_AS(parse_policy("sjjf"), ConfigError);
    CHECK(policy_name(PolicyId::Hybrid) == "hybrid");
}

TEST_CASE("effective priority ages one level per full quantum") {
    CHECK(effective_priority(2, 0, 0, 100000) == 2);
    CHECK(effective_priority(2, 0, 200000, 100000) == 0);
    CHECK(effective_priority(5, 0, 60000, 20000) == 2);
    CHECK(effective_priority(3, 0, 1000000, kInfiniteQuantum) == 3);
}

TEST_CASE("effective priority is nonincreasing and reaches 0 on schedule") {
    Prng rng(11);
    for (int round = 0; round < 200; ++round) {
        const int p = static_cast<int>(rng.uniform(0, 7));
        const TimeMs arrival = rng.uniform(0, 100000);
        const TimeMs q = rng.uniform(1, 50000);
        int prev = p;
        for (TimeMs now = arrival; now <= arrival + 8 * q; now += q / 3 + 1) {
            const int eff = effective_priority(p, arrival, now, q);
            CHECK(eff <= prev);
            CHECK(eff >= 0);
            prev = eff;
        }
        CHECK(effective_priority(p, arrival, arrival + p * q, q) == 0);
    }
}

TEST_CASE("fcfs picks the earliest arrival, id breaking ties") {
    std::vector<ReadyTask> ready = {make_task(1, 100, 10), make_task(2, 100, 5)};
    CHECK(select_fcfs(ready) == 2);
    ready = {make_task(1, 100, 5), make_task(2, 100, 5)};
    CHECK(select_fcfs(ready) == 1);
    CHECK_FALSE(select_fcfs({}).has_value());
}

TEST_CASE("sjf picks the shortest job") {
    std::vector<ReadyTask> ready = {make_task(1, 40000), make_task(2, 20000)};
    CHECK(select_sjf(ready) == 2);
    ready = {make_task(1, 500, 10), make_task(2, 500, 5)};
    CHECK(select_sjf(ready) == 2);  // equal lengths: earlier arrival wins
    CHECK_FALSE(select_sjf({}).has_value());
}

TEST_CASE("priority picks the lowest numeric priority") {
    std::vector<ReadyTask> ready = {make_task(1, 100, 0, 3), make_task(2, 100, 0, 0)};
    CHECK(select_priority(ready) == 2);
    ready = {make_task(1, 100, 10, 2), make_task(2, 100, 5, 2)};
    CHECK(select_priority(ready) == 2);
    CHECK_FALSE(select_priority({}).has_value());
}

TEST_CASE("hybrid reduces to sjf under equal priorities and no aging") {
    Prng rng(21);
    const HybridParams params{kInfiniteQuantum, 8};
    for (int round = 0; round < 100; ++round) {
        std::vector<ReadyTask> ready;
        const int n = static_cast<int>(rng.uniform(1, 30));
        for (int i = 0; i < n; ++i) {
            ready.push_back(make_task(i, rng.uniform(1, 1000), rng.uniform(0, 50), 4));
        }
        CHECK(select_hybrid(ready, 100, params) == select_sjf(ready));
    }
}

TEST_CASE("hybrid reduces to priority under equal lengths and no aging") {
    Prng rng(22);
    const HybridParams params{kInfiniteQuantum, 8};
    for (int round = 0; round < 100; ++round) {
        std::vector<ReadyTask> ready;
        const int n = static_cast<int>(rng.uniform(1, 30));
        for (int i = 0; i < n; ++i) {
            ready.push_back(make_task(i, 777, rng.uniform(0, 50), static_cast<int>(rng.uniform(0, 7))));
        }
        CHECK(select_hybrid(ready, 100, params) == select_priority(ready));
    }
}

TEST_CASE("hybrid rescues an aged low-priority task") {
    // Snapshot of the starvation scenario at t=100000: the long-waiting task
    // has aged to level 0 and wins the length tie-break.
    const HybridParams params{20000, 8};
    const std::vector<ReadyTask> ready = {
        make_task(0, 10000, 0, 5),       // p_eff = max(0, 5 - 100000/20000) = 0
        make_task(2, 25000, 50000, 0),   // p_eff = 0
        make_task(3, 25000, 100000, 0),  // p_eff = 0
    };
    CHECK(select_hybrid(ready, 100000, params) == 0);
    // Before it fully ages the high-priority tasks still win.
    CHECK(select_hybrid(ready, 99999, params) == 2);
}

TEST_CASE("selection is total and permutation-invariant") {
    Prng rng(23);
    std::mt19937_64 shuffler(99);
    const HybridParams params{20000, 8};
    for (int round = 0; round < 100; ++round) {
        std::vector<ReadyTask> ready;
        const int n = static_cast<int>(rng.uniform(1, 40));
        for (int i = 0; i < n; ++i) {
            ready.push_back(make_task(i, rng.uniform(1, 100), rng.uniform(0, 10),
                                      static_cast<int>(rng.uniform(0, 7))));
        }
        const TimeMs now = 10 + rng.uniform(0, 200000);
        const auto f = select_fcfs(ready);
        const auto s = select_sjf(ready);
        const auto p = select_priority(ready);
        const auto h = select_hybrid(ready, now, params);
        const auto member = [&ready](CloudletId id) {
            return std::any_of(ready.begin(), ready.end(),
                               [id](const ReadyTask& t) { return t.cloudlet_id == id; });
        };
        for (const auto& chosen : {f, s, p, h}) {
            REQUIRE(chosen.has_value());
            CHECK(member(*chosen));
        }
        std::shuffle(ready.begin(), ready.end(), shuffler);
        CHECK(select_fcfs(ready) == f);
        CHECK(select_sjf(ready) == s);
        CHECK(select_priority(ready) == p);
        CHECK(select_hybrid(ready, now, params) == h);
    }
}

TEST_CASE("assign_vm picks the least loaded VM, id breaking ties") {
    const auto vm = [](VmId id, TimeMs busy) {
        VmState state;
        state.spec.vm_id = id;
        state.total_busy_ms = busy;
        return state;
    };
    std::vector<VmState> idle = {vm(0, 160000), vm(1, 80000)};
    CHECK(assign_vm(idle) == 1);
    idle = {vm(0, 0), vm(1, 0)};
    CHECK(assign_vm(idle) == 0);
    idle = {vm(3, 42)};
    CHECK(assign_vm(idle) == 3);
    CHECK_THROWS_AS(assign_vm(std::vector<VmState>{}), SimError);
}
