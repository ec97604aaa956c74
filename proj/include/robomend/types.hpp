#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace robomend {

/// Simulation time in integer milliseconds. All timing in the library is
/// quantized to this unit; there is no floating-point clock anywhere.
using Millis = std::int64_t;

/// Raised when a scenario references something that cannot be resolved at
/// runtime (unknown predicate/action id, unknown workload handle). A run
/// that hits this aborts and records the fault in its trace.
class ScenarioFault : public std::runtime_error {
public:
    explicit ScenarioFault(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on misuse of the library API itself (ticking an invalid tree,
/// non-monotonic tick times). Distinct from ScenarioFault so tests can tell
/// configuration problems from runtime scenario problems.
class ConfigError : public std::logic_error {
public:
    explicit ConfigError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace robomend
