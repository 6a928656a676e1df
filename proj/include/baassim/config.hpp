#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "baassim/entities.hpp"
#include "baassim/policies.hpp"
#include "baassim/types.hpp"
#include "baassim/workload.hpp"

namespace baassim {

/// Everything one experiment needs. Defaults mirror the reference setup:
/// cloudlets of 40000 MI with 300/300 I/O sizes and one PE, VMs with
/// 250 MIPS, 512 MB RAM, 10000 MB image, 1000 bandwidth and one PE.
struct SimConfig {
    WorkloadConfig workload;
    std::optional<std::filesystem::path> workload_csv;  // replaces the generator
    int vm_count = 1;
    VmSpec vm;  // template; vm_id is assigned per instance
    int dc_count = 1;
    int chains = 1;
    HybridParams hybrid;
    TimeMs starvation_threshold_ms = 300000;
    std::optional<std::filesystem::path> out_dir;
};

/// Parses the JSON configuration document. Unknown keys are rejected at
/// every level and limits are validated; errors name the offending key.
/// Relative workload_csv paths resolve against base_dir.
SimConfig parse_config(const std::string& text,
                       const std::filesystem::path& base_dir = ".");

/// Reads the file and parses it with base_dir = the file's directory.
SimConfig load_config(const std::filesystem::path& path);

}  // namespace baassim
