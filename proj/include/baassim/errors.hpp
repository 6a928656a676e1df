#pragma once

#include <stdexcept>
#include <string>

namespace baassim {

/// Bad user input: malformed configuration, workload files, CLI values.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated simulation invariant (double lease, unknown VM, causality in the
/// event queue). Indicates a bug in the caller, not bad input; aborts the run.
class SimError : public std::logic_error {
public:
    explicit SimError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace baassim
