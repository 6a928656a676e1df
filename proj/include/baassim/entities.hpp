#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "baassim/types.hpp"
#include "baassim/workload.hpp"

namespace baassim {

struct VmSpec {
    VmId vm_id = 0;
    std::int64_t mips = 250;
    int pes = 1;
    int ram_mb = 512;
    int bandwidth = 1000;
    int image_size_mb = 10000;

    bool operator==(const VmSpec&) const = default;
};

struct DatacenterSpec {
    int dc_id = 0;
    std::vector<VmSpec> vm_specs;
};

/// Cloud Info Service: datacenters register here, the broker queries the
/// registered characteristics, and the virtual blockchains used by leases
/// are prepared here.
class CisRegistry {
public:
    void register_datacenter(DatacenterSpec dc);
    const DatacenterSpec& dc_characteristics(int dc_id) const;

    /// Allocates `count` fresh chain ids (consecutive, starting after any
    /// existing ids) and stores them.
    std::vector<ChainId> prepare_blockchains(int count);

    bool has_chain(ChainId id) const;
    const std::vector<ChainId>& chains() const { return chains_; }
    std::size_t datacenter_count() const { return datacenters_.size(); }

private:
    std::map<int, DatacenterSpec> datacenters_;
    std::vector<ChainId> chains_;
};

/// Binding of (user, cloudlet, VM, chain) created at dispatch and released
/// at completion. There is never more than one active lease per cloudlet.
struct BlockchainLease {
    LeaseId lease_id = 0;
    UserId user_id = 0;
    CloudletId cloudlet_id = 0;
    VmId vm_id = 0;
    ChainId chain_id = 0;
    TimeMs acquired_ms = 0;
    std::optional<TimeMs> released_ms;
};

class LeaseRegistry {
public:
    const BlockchainLease& acquire(const CisRegistry& cis, UserId user_id,
                                   CloudletId cloudlet_id, VmId vm_id, ChainId chain_id,
                                   TimeMs now_ms);
    const BlockchainLease& release(LeaseId lease_id, TimeMs now_ms);

    const BlockchainLease& lease(LeaseId lease_id) const;
    LeaseId active_lease_for(CloudletId cloudlet_id) const;

    std::int64_t acquired_count() const { return static_cast<std::int64_t>(leases_.size()); }
    std::int64_t released_count() const { return released_count_; }
    std::int64_t active_count() const { return acquired_count() - released_count_; }
    const std::vector<BlockchainLease>& leases() const { return leases_; }

private:
    std::vector<BlockchainLease> leases_;  // lease_id is the index
    std::unordered_map<CloudletId, LeaseId> active_by_cloudlet_;
    std::int64_t released_count_ = 0;
};

struct VmState {
    VmSpec spec;
    TimeMs busy_until_ms = 0;  // 0 while idle
    TimeMs total_busy_ms = 0;  // sum of exec durations of completed + running work
    std::optional<CloudletId> current_cloudlet;

    bool idle() const { return !current_cloudlet.has_value(); }
};

enum class HandshakeStep {
    BrokerRequest,
    DcRegistration,
    BlockchainPreparation,
    CharacteristicsResponse,
    FirstDispatch,
};

/// The component world one simulation run drives: CIS, the flat VM pool
/// (VMs of all datacenters form a single scheduling pool), and the lease
/// book. handshake_log records the setup steps in the order they happened;
/// the engine appends FirstDispatch when work first starts.
struct EntityWorld {
    CisRegistry cis;
    std::vector<VmState> vms;
    LeaseRegistry leases;
    std::vector<HandshakeStep> handshake_log;
};

/// Builds the world by walking the registration handshake in order: broker
/// request, datacenter registration, blockchain preparation, characteristics
/// response. VM ids are global 0..vm_count-1; datacenters receive near-even
/// contiguous blocks, so vm_count must be >= dc_count.
EntityWorld build_world(int dc_count, int vm_count, const VmSpec& vm_template, int chain_count);

/// Execution time of a cloudlet on a VM:
///   ceil(length_mi * 1000 / (mips * min(cloudlet.pes, vm.pes)))
TimeMs exec_duration_ms(const Cloudlet& cloudlet, const VmSpec& vm);

}  // namespace baassim
