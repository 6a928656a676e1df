#include "baassim/entities.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "baassim/errors.hpp"

namespace baassim {

void CisRegistry::register_datacenter(DatacenterSpec dc) {
    if (dc.vm_specs.empty()) {
        throw SimError("datacenter " + std::to_string(dc.dc_id) + " has no VMs");
    }
    const int dc_id = dc.dc_id;
    if (!datacenters_.emplace(dc_id, std::move(dc)).second) {
        throw SimError("datacenter " + std::to_string(dc_id) + " already registered");
    }
}

const DatacenterSpec& CisRegistry::dc_characteristics(int dc_id) const {
    const auto it = datacenters_.find(dc_id);
    if (it == datacenters_.end()) {
        throw SimError("unknown datacenter id " + std::to_string(dc_id));
    }
    return it->second;
}

std::vector<ChainId> CisRegistry::prepare_blockchains(int count) {
    if (count < 0) {
        throw SimError("prepare_blockchains: count must be >= 0");
    }
    // Ids are only ever minted here, so chains_ stays sorted ascending.
    ChainId next = chains_.empty() ? 0 : chains_.back() + 1;
    std::vector<ChainId> fresh;
    fresh.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        fresh.push_back(next + i);
        chains_.push_back(next + i);
    }
    return fresh;
}

bool CisRegistry::has_chain(ChainId id) const {
    return std::binary_search(chains_.begin(), chains_.end(), id);
}

const BlockchainLease& LeaseRegistry::acquire(const CisRegistry& cis, UserId user_id,
                                              CloudletId cloudlet_id, VmId vm_id,
                                              ChainId chain_id, TimeMs now_ms) {
    if (!cis.has_chain(chain_id)) {
        throw SimError("acquire_lease: unknown chain id " + std::to_string(chain_id));
    }
    if (active_by_cloudlet_.count(cloudlet_id) != 0) {
        throw SimError("acquire_lease: active lease already exists for cloudlet " +
                       std::to_string(cloudlet_id));
    }
    BlockchainLease lease;
    lease.lease_id = static_cast<LeaseId>(leases_.size());
    lease.user_id = user_id;
    lease.cloudlet_id = cloudlet_id;
    lease.vm_id = vm_id;
    lease.chain_id = chain_id;
    lease.acquired_ms = now_ms;
    leases_.push_back(lease);
    active_by_cloudlet_.emplace(cloudlet_id, lease.lease_id);
    return leases_.back();
}

const BlockchainLease& LeaseRegistry::release(LeaseId lease_id, TimeMs now_ms) {
    if (lease_id < 0 || lease_id >= static_cast<LeaseId>(leases_.size())) {
        throw SimError("release_lease: unknown lease id " + std::to_string(lease_id));
    }
    BlockchainLease& lease = leases_[static_cast<std::size_t>(lease_id)];
    if (lease.released_ms.has_value()) {
        throw SimError("release_lease: lease " + std::to_string(lease_id) + " already released");
    }
    if (now_ms < lease.acquired_ms) {
        throw SimError("release_lease: release time precedes acquisition");
    }
    lease.released_ms = now_ms;
    active_by_cloudlet_.erase(lease.cloudlet_id);
    ++released_count_;
    return lease;
}

const BlockchainLease& LeaseRegistry::lease(LeaseId lease_id) const {
    if (lease_id < 0 || lease_id >= static_cast<LeaseId>(leases_.size())) {
        throw SimError("unknown lease id " + std::to_string(lease_id));
    }
    return leases_[static_cast<std::size_t>(lease_id)];
}

LeaseId LeaseRegistry::active_lease_for(CloudletId cloudlet_id) const {
    const auto it = active_by_cloudlet_.find(cloudlet_id);
    if (it == active_by_cloudlet_.end()) {
        throw SimError("no active lease for cloudlet " + std::to_string(cloudlet_id));
    }
    return it->second;
}

EntityWorld build_world(int dc_count, int vm_count, const VmSpec& vm_template, int chain_count) {
    if (dc_count < 1) {
        throw ConfigError("dc_count must be >= 1");
    }
    if (vm_count < 1) {
        throw ConfigError("vm_count must be >= 1");
    }
    if (vm_count < dc_count) {
        throw ConfigError("vm_count must be >= dc_count (every datacenter hosts a VM)");
    }
    if (chain_count < 1) {
        throw ConfigError("chains must be >= 1");
    }
    if (vm_template.mips < 1) {
        throw ConfigError("vm mips must be >= 1");
    }
    if (vm_template.pes < 1) {
        throw ConfigError("vm pes must be >= 1");
    }

    EntityWorld world;
    world.handshake_log.push_back(HandshakeStep::BrokerRequest);

    const int base = vm_count / dc_count;
    const int extra = vm_count % dc_count;
    VmId next_vm = 0;
    for (int dc = 0; dc < dc_count; ++dc) {
        DatacenterSpec spec;
        spec.dc_id = dc;
        const int vms_here = base + (dc < extra ? 1 : 0);
        for (int i = 0; i < vms_here; ++i) {
            VmSpec vm = vm_template;
            vm.vm_id = next_vm++;
            spec.vm_specs.push_back(vm);
        }
        world.cis.register_datacenter(std::move(spec));
        world.handshake_log.push_back(HandshakeStep::DcRegistration);
    }

    world.cis.prepare_blockchains(chain_count);
    world.handshake_log.push_back(HandshakeStep::BlockchainPreparation);

    for (int dc = 0; dc < dc_count; ++dc) {
        const DatacenterSpec& spec = world.cis.dc_characteristics(dc);
        for (const VmSpec& vm : spec.vm_specs) {
            world.vms.push_back(VmState{vm, 0, 0, std::nullopt});
        }
        world.handshake_log.push_back(HandshakeStep::CharacteristicsResponse);
    }
    return world;
}

TimeMs exec_duration_ms(const Cloudlet& cloudlet, const VmSpec& vm) {
    if (cloudlet.length_mi < 1) {
        throw SimError("exec_duration: length_mi must be >= 1");
    }
    if (vm.mips < 1) {
        throw SimError("exec_duration: mips must be >= 1");
    }
    const int pes = std::min(cloudlet.pes, vm.pes);
    if (pes < 1) {
        throw SimError("exec_duration: pes must be >= 1");
    }
    const unsigned __int128 numerator = static_cast<unsigned __int128>(cloudlet.length_mi) * 1000u;
    const unsigned __int128 denominator =
        static_cast<unsigned __int128>(vm.mips) * static_cast<unsigned __int128>(pes);
    const unsigned __int128 duration = (numerator + denominator - 1) / denominator;
    if (duration > static_cast<unsigned __int128>(std::numeric_limits<TimeMs>::max())) {
        throw SimError("exec_duration overflows 64-bit milliseconds");
    }
    return static_cast<TimeMs>(duration);
}

}  // namespace baassim
