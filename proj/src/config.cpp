#include "baassim/config.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "baassim/errors.hpp"

namespace baassim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (allowed.count(key) == 0) {
            throw ConfigError("unknown key: " + prefix + key);
        }
    }
}

std::int64_t get_int(const json& obj, const std::string& key, std::int64_t fallback,
                     const std::string& prefix) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned()) {
        throw ConfigError(prefix + key + " must be an integer");
    }
    return v.get<std::int64_t>();
}

std::int64_t require_min(std::int64_t value, std::int64_t min, const std::string& name) {
    if (value < min) {
        throw ConfigError(name + " must be >= " + std::to_string(min));
    }
    return value;
}

std::string get_string(const json& obj, const std::string& key, const std::string& prefix) {
    const json& v = obj.at(key);
    if (!v.is_string()) {
        throw ConfigError(prefix + key + " must be a string");
    }
    return v.get<std::string>();
}

LengthDist parse_length(const json& obj) {
    reject_unknown_keys(obj, {"dist", "value", "min", "max"}, "workload.length.");
    if (!obj.contains("dist")) {
        throw ConfigError("workload.length.dist is required");
    }
    const std::string dist = get_string(obj, "dist", "workload.length.");
    if (dist == "constant") {
        const std::int64_t value =
            require_min(get_int(obj, "value", 40000, "workload.length."), 1, "workload.length.value");
        if (obj.contains("min") || obj.contains("max")) {
            throw ConfigError("workload.length: constant takes no min/max");
        }
        return LengthDist::constant(value);
    }
    if (dist == "uniform") {
        if (!obj.contains("min") || !obj.contains("max")) {
            throw ConfigError("workload.length: uniform requires min and max");
        }
        if (obj.contains("value")) {
            throw ConfigError("workload.length: uniform takes no value");
        }
        const std::int64_t lo = require_min(get_int(obj, "min", 0, "workload.length."), 1,
                                            "workload.length.min");
        const std::int64_t hi = get_int(obj, "max", 0, "workload.length.");
        if (lo > hi) {
            throw ConfigError("workload.length.min must be <= workload.length.max");
        }
        return LengthDist::uniform(lo, hi);
    }
    throw ConfigError("workload.length.dist must be 'constant' or 'uniform'");
}

PriorityDist parse_priority(const json& obj, int priority_levels) {
    reject_unknown_keys(obj, {"dist", "value"}, "workload.priority.");
    if (!obj.contains("dist")) {
        throw ConfigError("workload.priority.dist is required");
    }
    const std::string dist = get_string(obj, "dist", "workload.priority.");
    if (dist == "constant") {
        const auto value = static_cast<int>(
            require_min(get_int(obj, "value", 0, "workload.priority."), 0, "workload.priority.value"));
        return PriorityDist::constant(value);
    }
    if (dist == "uniform") {
        if (obj.contains("value")) {
            throw ConfigError("workload.priority: uniform takes no value");
        }
        return PriorityDist::uniform(priority_levels);
    }
    throw ConfigError("workload.priority.dist must be 'constant' or 'uniform'");
}

ArrivalModel parse_arrival(const json& obj) {
    reject_unknown_keys(obj, {"dist", "base_interval_ms", "jitter_ms"}, "workload.arrival.");
    if (!obj.contains("dist")) {
        throw ConfigError("workload.arrival.dist is required");
    }
    const std::string dist = get_string(obj, "dist", "workload.arrival.");
    if (dist == "all_at_zero") {
        if (obj.contains("base_interval_ms") || obj.contains("jitter_ms")) {
            throw ConfigError("workload.arrival: all_at_zero takes no parameters");
        }
        return ArrivalModel::all_at_zero();
    }
    if (dist == "uniform_jitter") {
        const std::int64_t base = require_min(get_int(obj, "base_interval_ms", 0, "workload.arrival."),
                                              0, "workload.arrival.base_interval_ms");
        const std::int64_t jitter = require_min(get_int(obj, "jitter_ms", 0, "workload.arrival."), 0,
                                                "workload.arrival.jitter_ms");
        return ArrivalModel::uniform_jitter(base, jitter);
    }
    throw ConfigError("workload.arrival.dist must be 'all_at_zero' or 'uniform_jitter'");
}

HybridParams parse_hybrid(const json& obj) {
    reject_unknown_keys(obj, {"aging_quantum_ms", "priority_levels"}, "hybrid.");
    HybridParams params;
    if (obj.contains("aging_quantum_ms")) {
        const json& q = obj.at("aging_quantum_ms");
        if (q.is_string()) {
            if (q.get<std::string>() != "infinite") {
                throw ConfigError("hybrid.aging_quantum_ms must be a positive integer or \"infinite\"");
            }
            params.aging_quantum_ms = kInfiniteQuantum;
        } else if (q.is_number_integer() || q.is_number_unsigned()) {
            params.aging_quantum_ms =
                require_min(q.get<std::int64_t>(), 1, "hybrid.aging_quantum_ms");
        } else {
            throw ConfigError("hybrid.aging_quantum_ms must be a positive integer or \"infinite\"");
        }
    }
    params.priority_levels = static_cast<int>(
        require_min(get_int(obj, "priority_levels", 8, "hybrid."), 1, "hybrid.priority_levels"));
    return params;
}

WorkloadConfig parse_workload(const json& obj, int priority_levels,
                              std::optional<std::filesystem::path>& csv_out,
                              const std::filesystem::path& base_dir) {
    reject_unknown_keys(obj,
                        {"csv_path", "num_cloudlets", "length", "priority", "arrival", "file_size",
                         "output_size", "pes", "seed"},
                        "workload.");
    WorkloadConfig wl;
    wl.priority.levels = priority_levels;

    if (obj.contains("csv_path")) {
        if (obj.size() != 1) {
            throw ConfigError("workload.csv_path cannot be combined with generator settings");
        }
        std::filesystem::path p = get_string(obj, "csv_path", "workload.");
        if (p.is_relative()) {
            p = base_dir / p;
        }
        csv_out = p;
        return wl;
    }

    wl.num_cloudlets = require_min(get_int(obj, "num_cloudlets", wl.num_cloudlets, "workload."), 0,
                                   "workload.num_cloudlets");
    if (obj.contains("length")) {
        wl.length = parse_length(obj.at("length"));
    }
    if (obj.contains("priority")) {
        wl.priority = parse_priority(obj.at("priority"), priority_levels);
    } else {
        wl.priority.levels = priority_levels;
    }
    if (obj.contains("arrival")) {
        wl.arrival = parse_arrival(obj.at("arrival"));
    }
    wl.file_size =
        require_min(get_int(obj, "file_size", wl.file_size, "workload."), 0, "workload.file_size");
    wl.output_size = require_min(get_int(obj, "output_size", wl.output_size, "workload."), 0,
                                 "workload.output_size");
    wl.pes = static_cast<int>(require_min(get_int(obj, "pes", wl.pes, "workload."), 1, "workload.pes"));
    if (obj.contains("seed")) {
        const json& s = obj.at("seed");
        const bool negative = s.is_number_integer() && s.get<std::int64_t>() < 0;
        if ((!s.is_number_integer() && !s.is_number_unsigned()) || negative) {
            throw ConfigError("workload.seed must be a nonnegative integer");
        }
        wl.seed = s.get<std::uint64_t>();
    }
    return wl;
}

VmSpec parse_vm(const json& obj) {
    reject_unknown_keys(obj, {"mips", "pes", "ram_mb", "bandwidth", "image_size_mb"}, "vm.");
    VmSpec vm;
    vm.mips = require_min(get_int(obj, "mips", vm.mips, "vm."), 1, "vm.mips");
    vm.pes = static_cast<int>(require_min(get_int(obj, "pes", vm.pes, "vm."), 1, "vm.pes"));
    vm.ram_mb = static_cast<int>(require_min(get_int(obj, "ram_mb", vm.ram_mb, "vm."), 0, "vm.ram_mb"));
    vm.bandwidth =
        static_cast<int>(require_min(get_int(obj, "bandwidth", vm.bandwidth, "vm."), 0, "vm.bandwidth"));
    vm.image_size_mb = static_cast<int>(
        require_min(get_int(obj, "image_size_mb", vm.image_size_mb, "vm."), 0, "vm.image_size_mb"));
    return vm;
}

}  // namespace

SimConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    reject_unknown_keys(root,
                        {"workload", "vm_count", "vm", "dc_count", "chains", "hybrid",
                         "starvation_threshold_ms", "out_dir"},
                        "");

    SimConfig cfg;
    if (root.contains("hybrid")) {
        cfg.hybrid = parse_hybrid(root.at("hybrid"));
    }
    if (root.contains("workload")) {
        cfg.workload =
            parse_workload(root.at("workload"), cfg.hybrid.priority_levels, cfg.workload_csv, base_dir);
    } else {
        cfg.workload.priority.levels = cfg.hybrid.priority_levels;
    }
    cfg.vm_count =
        static_cast<int>(require_min(get_int(root, "vm_count", cfg.vm_count, ""), 1, "vm_count"));
    if (root.contains("vm")) {
        cfg.vm = parse_vm(root.at("vm"));
    }
    cfg.dc_count =
        static_cast<int>(require_min(get_int(root, "dc_count", cfg.dc_count, ""), 1, "dc_count"));
    cfg.chains = static_cast<int>(require_min(get_int(root, "chains", cfg.chains, ""), 1, "chains"));
    if (cfg.vm_count < cfg.dc_count) {
        throw ConfigError("vm_count must be >= dc_count (every datacenter hosts a VM)");
    }
    cfg.starvation_threshold_ms =
        require_min(get_int(root, "starvation_threshold_ms", cfg.starvation_threshold_ms, ""), 0,
                    "starvation_threshold_ms");
    if (root.contains("out_dir")) {
        std::filesystem::path p = get_string(root, "out_dir", "");
        if (p.is_relative()) {
            p = base_dir / p;
        }
        cfg.out_dir = p;
    }
    return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::filesystem::path base =
        path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    return parse_config(buffer.str(), base);
}

}  // namespace baassim
