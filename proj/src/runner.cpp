#include "baassim/runner.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "baassim/errors.hpp"
#include "baassim/svg.hpp"

namespace baassim {

namespace {

MetricsReport zero_report(PolicyId policy, std::size_t vm_count) {
    MetricsReport report;
    report.policy = policy;
    report.per_vm_busy_ms.assign(vm_count, 0);
    return report;
}

// All contents are composed in memory first and the streams are opened (and
// checked) before the first byte goes out, so an unwritable target fails
// without leaving partial files behind.
void write_output_files(const std::filesystem::path& out_dir,
                        const std::vector<std::pair<std::string, std::string>>& files) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw std::runtime_error("cannot create output directory: " + out_dir.string());
    }
    std::vector<std::ofstream> streams;
    streams.reserve(files.size());
    for (const auto& [name, content] : files) {
        (void)content;
        streams.emplace_back(out_dir / name, std::ios::binary | std::ios::trunc);
        if (!streams.back()) {
            throw std::runtime_error("cannot open output file: " + (out_dir / name).string());
        }
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
        streams[i] << files[i].second;
        streams[i].flush();
        if (streams[i].fail()) {
            throw std::runtime_error("failed writing output file: " +
                                     (out_dir / files[i].first).string());
        }
    }
}

std::vector<PolicyId> in_fixed_order(const std::vector<PolicyId>& requested) {
    std::vector<PolicyId> ordered;
    for (const PolicyId policy : kPolicyOrder) {
        for (const PolicyId r : requested) {
            if (r == policy) {
                ordered.push_back(policy);
                break;
            }
        }
    }
    return ordered;
}

}  // namespace

std::vector<Cloudlet> materialize_workload(const SimConfig& config) {
    if (config.workload_csv) {
        return load_workload_csv(*config.workload_csv);
    }
    return generate(config.workload);
}

std::uint64_t workload_fingerprint(const std::vector<Cloudlet>& cloudlets) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;  // FNV-1a 64
    const auto mix = [&hash](std::uint64_t value) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (value >> (byte * 8)) & 0xffu;
            hash *= 0x100000001b3ULL;
        }
    };
    for (const Cloudlet& c : cloudlets) {
        mix(static_cast<std::uint64_t>(c.cloudlet_id));
        mix(static_cast<std::uint64_t>(c.user_id));
        mix(static_cast<std::uint64_t>(c.length_mi));
        mix(static_cast<std::uint64_t>(c.file_size));
        mix(static_cast<std::uint64_t>(c.output_size));
        mix(static_cast<std::uint64_t>(c.pes));
        mix(static_cast<std::uint64_t>(c.priority));
        mix(static_cast<std::uint64_t>(c.arrival_ms));
    }
    return hash;
}

PolicyRunOutcome simulate_policy(const SimConfig& config, PolicyId policy,
                                 const std::vector<Cloudlet>& workload) {
    EntityWorld world = build_world(config.dc_count, config.vm_count, config.vm, config.chains);
    Simulation sim(world, policy, config.hybrid);

    PolicyRunOutcome outcome;
    outcome.sim = sim.run(workload);

    std::vector<TimeMs> per_vm_busy;
    per_vm_busy.reserve(world.vms.size());
    for (const VmState& vm : world.vms) {
        per_vm_busy.push_back(vm.total_busy_ms);
    }
    outcome.report = outcome.sim.records.empty()
                         ? zero_report(policy, world.vms.size())
                         : compute_report(outcome.sim.records, per_vm_busy, policy,
                                          config.starvation_threshold_ms);
    outcome.handshake_log = world.handshake_log;
    outcome.leases_acquired = world.leases.acquired_count();
    outcome.leases_released = world.leases.released_count();
    return outcome;
}

void run_command(const SimConfig& config, PolicyId policy,
                 std::optional<std::uint64_t> seed_override,
                 const std::filesystem::path& out_dir) {
    SimConfig effective = config;
    if (seed_override) {
        effective.workload.seed = *seed_override;
    }
    const std::vector<Cloudlet> workload = materialize_workload(effective);
    const PolicyRunOutcome outcome = simulate_policy(effective, policy, workload);

    std::ostringstream tasks;
    write_task_csv(tasks, outcome.sim.records);
    std::ostringstream comparison;
    write_comparison_csv(comparison, {outcome.report});

    const std::string task_file = "tasks_" + std::string(policy_name(policy)) + ".csv";
    write_output_files(out_dir, {{task_file, tasks.str()}, {"comparison.csv", comparison.str()}});
}

void compare_command(const SimConfig& config, const std::vector<PolicyId>& policies,
                     const std::filesystem::path& out_dir) {
    if (policies.empty()) {
        throw ConfigError("compare requires at least one policy");
    }
    const std::vector<PolicyId> ordered = in_fixed_order(policies);

    const std::vector<Cloudlet> workload = materialize_workload(config);
    const std::uint64_t fingerprint = workload_fingerprint(workload);

    std::vector<MetricsReport> reports;
    reports.reserve(ordered.size());
    for (const PolicyId policy : ordered) {
        if (workload_fingerprint(workload) != fingerprint) {
            throw SimError("workload mutated between policy runs");
        }
        reports.push_back(simulate_policy(config, policy, workload).report);
    }

    std::ostringstream comparison;
    write_comparison_csv(comparison, reports);
    write_output_files(out_dir,
                       {{"comparison.csv", comparison.str()}, {"comparison.svg", comparison_svg(reports)}});
}

std::filesystem::path resolve_out_dir(const std::optional<std::string>& cli_value,
                                      const SimConfig& config) {
    if (cli_value && !cli_value->empty()) {
        return *cli_value;
    }
    if (config.out_dir) {
        return *config.out_dir;
    }
    if (const char* env = std::getenv("BAAS_SIM_OUT"); env != nullptr && *env != '\0') {
        return env;
    }
    throw ConfigError("no output directory: pass --out, set out_dir in the config, "
                      "or export BAAS_SIM_OUT");
}

}  // namespace baassim
