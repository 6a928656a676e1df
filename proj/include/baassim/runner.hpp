#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "baassim/config.hpp"
#include "baassim/engine.hpp"
#include "baassim/metrics.hpp"

namespace baassim {

struct PolicyRunOutcome {
    SimulationResult sim;
    MetricsReport report;  // zero row when the workload was empty
    std::vector<HandshakeStep> handshake_log;
    std::int64_t leases_acquired = 0;
    std::int64_t leases_released = 0;
};

/// Loads the CSV workload when configured, otherwise generates one.
std::vector<Cloudlet> materialize_workload(const SimConfig& config);

/// FNV-1a over every field of every cloudlet; used to assert that each
/// policy in a comparison saw the identical workload.
std::uint64_t workload_fingerprint(const std::vector<Cloudlet>& cloudlets);

/// Builds a fresh entity world, runs the workload under one policy and
/// aggregates the report.
PolicyRunOutcome simulate_policy(const SimConfig& config, PolicyId policy,
                                 const std::vector<Cloudlet>& workload);

/// run: writes tasks_<policy>.csv and a one-row comparison.csv into out_dir.
/// Throws ConfigError on bad input and std::runtime_error on I/O failure;
/// output files are only created once all content exists in memory.
void run_command(const SimConfig& config, PolicyId policy,
                 std::optional<std::uint64_t> seed_override,
                 const std::filesystem::path& out_dir);

/// compare: runs the identical workload under each requested policy and
/// writes comparison.csv plus comparison.svg. Rows and bars always appear in
/// the fixed order fcfs, sjf, priority, hybrid.
void compare_command(const SimConfig& config, const std::vector<PolicyId>& policies,
                     const std::filesystem::path& out_dir);

/// --out flag, then the config's out_dir, then $BAAS_SIM_OUT.
std::filesystem::path resolve_out_dir(const std::optional<std::string>& cli_value,
                                      const SimConfig& config);

}  // namespace baassim
