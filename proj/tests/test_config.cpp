#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "baassim/config.hpp"
#include "baassim/errors.hpp"
#include "test_support.hpp"

using namespace baassim;

namespace {

void expect_error(const std::string& text, const std::string& fragment) {
    try {
        parse_config(text);
        FAIL_CHECK("expected ConfigError for: " << text);
    } catch (const ConfigError& e) {
        CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos,
                      "got: " << e.what() << " expected fragment: " << fragment);
    }
}

}  // namespace

TEST_CASE("empty document yields the reference defaults") {
    const SimConfig cfg = parse_config("{}");
    CHECK(cfg.workload.num_cloudlets == 1000000);
    CHECK(cfg.workload.length.kind == LengthDist::Kind::Constant);
    CHECK(cfg.workload.length.value == 40000);
    CHECK(cfg.workload.file_size == 300);
    CHECK(cfg.workload.output_size == 300);
    CHECK(cfg.workload.pes == 1);
    CHECK(cfg.workload.seed == 0);
    CHECK(cfg.vm.mips == 250);
    CHECK(cfg.vm.ram_mb == 512);
    CHECK(cfg.vm.bandwidth == 1000);
    CHECK(cfg.vm.image_size_mb == 10000);
    CHECK(cfg.vm.pes == 1);
    CHECK(cfg.vm_count == 1);
    CHECK(cfg.dc_count == 1);
    CHECK(cfg.chains == 1);
    CHECK(cfg.hybrid.aging_quantum_ms == 20000);
    CHECK(cfg.hybrid.priority_levels == 8);
    CHECK(cfg.starvation_threshold_ms == 300000);
    CHECK_FALSE(cfg.out_dir.has_value());
    CHECK_FALSE(cfg.workload_csv.has_value());
}

TEST_CASE("violated limits name the key") {
    expect_error(R"({"vm_count": 0})", "vm_count must be >= 1");
    expect_error(R"({"chains": 0})", "chains must be >= 1");
    expect_error(R"({"dc_count": 0})", "dc_count must be >= 1");
    expect_error(R"({"vm_count": 1, "dc_count": 2})", "vm_count must be >= dc_count");
    expect_error(R"({"vm": {"mips": 0}})", "vm.mips must be >= 1");
    expect_error(R"({"hybrid": {"priority_levels": 0}})", "priority_levels must be >= 1");
    expect_error(R"({"hybrid": {"aging_quantum_ms": 0}})", "aging_quantum_ms must be >= 1");
    expect_error(R"({"starvation_threshold_ms": -1})", "starvation_threshold_ms must be >= 0");
    expect_error(R"({"workload": {"num_cloudlets": -5}})", "num_cloudlets must be >= 0");
    expect_error(R"({"workload": {"length": {"dist": "uniform", "min": 9, "max": 3}}})",
                 "length.min must be <= ");
}

TEST_CASE("unknown keys are rejected at every level") {
    expect_error(R"({"pollicy": "sjf"})", "unknown key: pollicy");
    expect_error(R"({"workload": {"n": 3}})", "unknown key: workload.n");
    expect_error(R"({"vm": {"cores": 2}})", "unknown key: vm.cores");
    expect_error(R"({"hybrid": {"quantum": 5}})", "unknown key: hybrid.quantum");
    expect_error(R"({"workload": {"arrival": {"dist": "all_at_zero", "rate": 3}}})",
                 "unknown key: workload.arrival.rate");
}

TEST_CASE("malformed documents are rejected") {
    expect_error("{", "invalid JSON");
    expect_error("[1,2]", "must be a JSON object");
    expect_error(R"({"vm_count": "two"})", "vm_count must be an integer");
    expect_error(R"({"vm_count": 1.5})", "vm_count must be an integer");
    expect_error(R"({"workload": {"seed": -1}})", "seed must be a nonnegative integer");
}

TEST_CASE("distributions parse with their own key sets") {
    const SimConfig cfg = parse_config(R"({
        "workload": {
            "num_cloudlets": 100,
            "length": {"dist": "uniform", "min": 10000, "max": 70000},
            "priority": {"dist": "uniform"},
            "arrival": {"dist": "uniform_jitter", "base_interval_ms": 50, "jitter_ms": 10},
            "seed": 42
        },
        "hybrid": {"priority_levels": 4}
    })");
    CHECK(cfg.workload.length.kind == LengthDist::Kind::Uniform);
    CHECK(cfg.workload.length.min == 10000);
    CHECK(cfg.workload.length.max == 70000);
    CHECK(cfg.workload.priority.kind == PriorityDist::Kind::Uniform);
    CHECK(cfg.workload.priority.levels == 4);  // tied to hybrid.priority_levels
    CHECK(cfg.workload.arrival.kind == ArrivalModel::Kind::UniformJitter);
    CHECK(cfg.workload.arrival.base_interval_ms == 50);
    CHECK(cfg.workload.arrival.jitter_ms == 10);
    CHECK(cfg.workload.seed == 42);

    expect_error(R"({"workload": {"length": {"dist": "uniform", "min": 1}}})",
                 "uniform requires min and max");
    expect_error(R"({"workload": {"length": {"dist": "constant", "min": 1, "value": 5, "max": 2}}})",
                 "constant takes no min/max");
    expect_error(R"({"workload": {"length": {"dist": "gaussian"}}})",
                 "must be 'constant' or 'uniform'");
    expect_error(R"({"workload": {"arrival": {"dist": "all_at_zero", "jitter_ms": 1}}})",
                 "all_at_zero takes no parameters");
}

TEST_CASE("infinite aging quantum parses from the string form") {
    const SimConfig cfg = parse_config(R"({"hybrid": {"aging_quantum_ms": "infinite"}})");
    CHECK(cfg.hybrid.aging_quantum_ms == kInfiniteQuantum);
    expect_error(R"({"hybrid": {"aging_quantum_ms": "forever"}})",
                 "positive integer or \"infinite\"");
}

TEST_CASE("csv workloads exclude generator settings and resolve relative paths") {
    const SimConfig cfg = parse_config(R"({"workload": {"csv_path": "tasks.csv"}})", "/data/exp");
    REQUIRE(cfg.workload_csv.has_value());
    CHECK(*cfg.workload_csv == std::filesystem::path("/data/exp/tasks.csv"));
    expect_error(R"({"workload": {"csv_path": "a.csv", "num_cloudlets": 5}})",
                 "cannot be combined");
}

TEST_CASE("load_config resolves paths against the file location") {
    const auto dir = testutil::fresh_temp_dir("cfg");
    testutil::write_file(dir / "config.json",
                         R"({"workload": {"csv_path": "wl.csv"}, "out_dir": "results"})");
    const SimConfig cfg = load_config(dir / "config.json");
    CHECK(*cfg.workload_csv == dir / "wl.csv");
    CHECK(*cfg.out_dir == dir / "results");
    CHECK_THROWS_AS(load_config(dir / "nope.json"), ConfigError);
    std::filesystem::remove_all(dir);
}
