#pragma once

#include <cstdint>

namespace baassim {

// Simulation time is integer milliseconds throughout; the core never touches
// floating point, so runs are reproducible bit-for-bit across platforms.
using TimeMs = std::int64_t;

using CloudletId = std::int64_t;
using UserId = std::int64_t;
using VmId = int;
using ChainId = int;
using LeaseId = std::int64_t;

}  // namespace baassim
