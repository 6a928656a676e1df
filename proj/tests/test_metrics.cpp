#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "baassim/engine.hpp"
#include "baassim/errors.hpp"
#include "baassim/metrics.hpp"
#include "test_support.hpp"

using namespace baassim;
using testutil::make_cloudlet;

namespace {

std::vector<TaskRecord> four_task_fcfs_records() {
    // The hand-computed FCFS schedule: waits 0, 0, 80000, 120000.
    return {
        TaskRecord{0, 0, 0, 0, 40000, 0, 0, 160000},
        TaskRecord{1, 1, 1, 0, 20000, 0, 0, 80000},
        TaskRecord{2, 2, 1, 0, 10000, 0, 80000, 120000},
        TaskRecord{3, 3, 1, 0, 30000, 0, 120000, 240000},
    };
}

}  // namespace

TEST_CASE("report for the four-task fcfs schedule") {
    const std::vector<TimeMs> busy = {160000, 240000};
    const MetricsReport report = compute_report(four_task_fcfs_records(), busy, PolicyId::Fcfs, 300000);
    CHECK(report.n_tasks == 4);
    CHECK(report.total_wait_ms == 200000);
    CHECK(format_fixed3(report.total_wait_ms, report.n_tasks) == "50000.000");
    CHECK(report.max_wait_ms == 120000);
    CHECK(report.makespan_ms == 240000);
    CHECK(report.per_vm_busy_ms == busy);
    CHECK(report.starved_count == 0);
}

TEST_CASE("single task report") {
    const std::vector<TaskRecord> records = {TaskRecord{0, 0, 0, 0, 40000, 0, 0, 160000}};
    const MetricsReport report = compute_report(records, {160000}, PolicyId::Sjf, 1000);
    CHECK(report.total_wait_ms == 0);
    CHECK(report.makespan_ms == 160000);
    CHECK(report.load_cov == 0.0);  // single VM: population sd of one value
}

TEST_CASE("unreachable starvation threshold counts nothing") {
    const MetricsReport report = compute_report(four_task_fcfs_records(), {160000, 240000},
                                                PolicyId::Fcfs, std::int64_t{1} << 62);
    CHECK(report.starved_count == 0);
}

TEST_CASE("empty records are rejected") {
    CHECK_THROWS_AS(compute_report({}, {100}, PolicyId::Fcfs, 0), SimError);
}

TEST_CASE("load_cov basics") {
    CHECK(load_cov({160000, 160000}) == 0.0);
    CHECK(load_cov({100, 300}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(load_cov({}), SimError);
    CHECK_THROWS_AS(load_cov({0, 0}), SimError);
}

TEST_CASE("load_cov is scale invariant") {
    Prng rng(5);
    for (int round = 0; round < 50; ++round) {
        std::vector<TimeMs> busy;
        const int n = static_cast<int>(rng.uniform(1, 20));
        for (int i = 0; i < n; ++i) {
            busy.push_back(rng.uniform(1, 1000000));
        }
        std::vector<TimeMs> scaled;
        const TimeMs k = rng.uniform(2, 1000);
        for (const TimeMs b : busy) {
            scaled.push_back(b * k);
        }
        CHECK(load_cov(scaled) == doctest::Approx(load_cov(busy)).epsilon(1e-12));
    }
}

TEST_CASE("starved count uses a strict threshold") {
    std::vector<TaskRecord> records;
    for (const TimeMs wait : {0, 50, 100}) {
        records.push_back(TaskRecord{0, 0, 0, 0, 1, 0, wait, wait + 1});
    }
    CHECK(starved_count(records, 60) == 1);
    CHECK(starved_count(records, 100) == 0);     // strictly greater
    CHECK(starved_count(records, 99) == 1);
    std::vector<TaskRecord> zero_waits = {TaskRecord{0, 0, 0, 0, 1, 0, 0, 1}};
    CHECK(starved_count(zero_waits, 0) == 0);
    CHECK(starved_count({}, 0) == 0);
    CHECK_THROWS_AS(starved_count(records, -1), SimError);
}

TEST_CASE("fixed3 formatting rounds half up") {
    CHECK(format_fixed3(200000, 4) == "50000.000");
    CHECK(format_fixed3(1, 3) == "0.333");
    CHECK(format_fixed3(2, 3) == "0.667");
    CHECK(format_fixed3(5, 2) == "2.500");
    CHECK(format_fixed3(25, 10000) == "0.003");   // 0.0025 rounds up, not to even
    CHECK(format_fixed3(15, 10000) == "0.002");   // 0.0015 rounds up
    CHECK(format_fixed3(1, 2000) == "0.001");     // 0.0005 rounds up
    CHECK(format_fixed3(1, 2001) == "0.000");     // just below the half
    CHECK(format_fixed3(0, 5) == "0.000");
    CHECK_THROWS_AS(format_fixed3(1, 0), SimError);
}

TEST_CASE("busy-time totals are conserved against records") {
    Prng rng(17);
    for (int round = 0; round < 20; ++round) {
        WorkloadConfig config;
        config.num_cloudlets = rng.uniform(1, 60);
        config.length = LengthDist::uniform(1, 50000);
        config.seed = rng.next();
        const auto workload = generate(config);
        const int vm_count = static_cast<int>(rng.uniform(1, 5));
        EntityWorld world = build_world(1, vm_count, VmSpec{}, 1);
        Simulation sim(world, PolicyId::Sjf, HybridParams{});
        const auto result = sim.run(workload);

        std::vector<TimeMs> busy;
        for (const VmState& vm : world.vms) {
            busy.push_back(vm.total_busy_ms);
        }
        const MetricsReport report = compute_report(result.records, busy, PolicyId::Sjf, 300000);

        std::int64_t exec_sum = 0;
        std::int64_t wait_sum = 0;
        for (const TaskRecord& r : result.records) {
            exec_sum += r.finish_ms - r.start_ms;
            wait_sum += r.wait_ms();
        }
        std::int64_t busy_sum = 0;
        for (const TimeMs b : report.per_vm_busy_ms) {
            busy_sum += b;
        }
        CHECK(busy_sum == exec_sum);
        CHECK(report.total_wait_ms == wait_sum);  // exact integer sum, no rounding
    }
}

TEST_CASE("csv writers emit the specified schemas") {
    std::ostringstream tasks;
    write_task_csv(tasks, four_task_fcfs_records());
    const auto lines = testutil::split_lines(tasks.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] ==
          "cloudlet_id,user_id,vm_id,priority,length_mi,arrival_ms,start_ms,finish_ms,wait_ms,"
          "turnaround_ms");
    CHECK(lines[1] == "0,0,0,0,40000,0,0,160000,0,160000");
    CHECK(lines[3] == "2,2,1,0,10000,0,80000,120000,80000,120000");

    MetricsReport report = compute_report(four_task_fcfs_records(), {160000, 240000},
                                          PolicyId::Fcfs, 300000);
    std::ostringstream comparison;
    write_comparison_csv(comparison, {report});
    const auto cmp_lines = testutil::split_lines(comparison.str());
    REQUIRE(cmp_lines.size() == 2);
    CHECK(cmp_lines[0] == "policy,n_tasks,avg_wait_ms,max_wait_ms,makespan_ms,load_cov,starved_count");
    CHECK(cmp_lines[1] == "fcfs,4,50000.000,120000,240000,0.200,0");
}
