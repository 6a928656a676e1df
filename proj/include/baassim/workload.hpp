#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "baassim/types.hpp"

namespace baassim {

/// SplitMix64 generator. Chosen over the standard library engines so that
/// every implementation of this simulator, in any language, reproduces the
/// exact same workload stream from the same seed.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], both ends inclusive, computed as
    /// lo + next() mod (hi - lo + 1). The modulo bias is accepted: a portable
    /// definition matters more here than distributional perfection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/// One unit of user work. Lengths are in million instructions (MI);
/// file_size/output_size are carried through to reports but play no role in
/// timing (there is no transfer-time model).
struct Cloudlet {
    CloudletId cloudlet_id = 0;
    UserId user_id = 0;
    std::int64_t length_mi = 1;
    std::int64_t file_size = 300;
    std::int64_t output_size = 300;
    int pes = 1;
    int priority = 0;
    TimeMs arrival_ms = 0;

    bool operator==(const Cloudlet&) const = default;
};

struct LengthDist {
    enum class Kind { Constant, Uniform };
    Kind kind = Kind::Constant;
    std::int64_t value = 40000;  // Constant
    std::int64_t min = 1;        // Uniform
    std::int64_t max = 1;

    static LengthDist constant(std::int64_t v) { return {Kind::Constant, v, 1, 1}; }
    static LengthDist uniform(std::int64_t lo, std::int64_t hi) { return {Kind::Uniform, 0, lo, hi}; }
};

struct PriorityDist {
    enum class Kind { Constant, Uniform };
    Kind kind = Kind::Constant;
    int value = 0;   // Constant
    int levels = 8;  // Uniform draws over [0, levels - 1]

    static PriorityDist constant(int v) { return {Kind::Constant, v, 8}; }
    static PriorityDist uniform(int levels) { return {Kind::Uniform, 0, levels}; }
};

struct ArrivalModel {
    enum class Kind { AllAtZero, UniformJitter };
    Kind kind = Kind::AllAtZero;
    TimeMs base_interval_ms = 0;  // UniformJitter: arrival_i = i * base + jitter draw
    TimeMs jitter_ms = 0;

    static ArrivalModel all_at_zero() { return {}; }
    static ArrivalModel uniform_jitter(TimeMs base, TimeMs jitter) {
        return {Kind::UniformJitter, base, jitter};
    }
};

struct WorkloadConfig {
    std::int64_t num_cloudlets = 1'000'000;
    LengthDist length;
    PriorityDist priority;
    ArrivalModel arrival;
    std::int64_t file_size = 300;
    std::int64_t output_size = 300;
    int pes = 1;
    std::uint64_t seed = 0;
};

/// Deterministic synthetic workload. Per cloudlet the fields are sampled in
/// fixed order -- length, then priority, then arrival jitter -- and a field
/// consumes a draw only when its distribution is random (constant values and
/// all_at_zero arrivals take nothing from the stream). The result is sorted
/// by (arrival_ms, generation index) and ids are assigned densely from 0 in
/// that order, so arrival_ms is nondecreasing in cloudlet_id.
std::vector<Cloudlet> generate(const WorkloadConfig& config);

/// Reads the workload CSV schema:
///   cloudlet_id,user_id,length_mi,file_size,output_size,pes,priority,arrival_ms
/// Rows may appear in any order; errors name the offending line. The loaded
/// list must satisfy the same invariants generate() guarantees.
std::vector<Cloudlet> load_workload_csv(const std::filesystem::path& path);

void write_workload_csv(std::ostream& out, const std::vector<Cloudlet>& cloudlets);

/// Checks ids dense from 0 in list order, arrival_ms nondecreasing in
/// cloudlet_id, and per-field bounds. Throws ConfigError.
void validate_workload(const std::vector<Cloudlet>& cloudlets);

}  // namespace baassim
