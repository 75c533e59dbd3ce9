#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Guard failures and input errors carry distinct types so the CLI can map
// them to distinct exit codes (2 config, 3 tolerance, 4 size guard).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CensusTooLarge : std::runtime_error {
    explicit CensusTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnalignedRadius : std::runtime_error {
    explicit UnalignedRadius(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotIrreducible : std::runtime_error {
    explicit NotIrreducible(const std::string& msg) : std::runtime_error(msg) {}
};

struct ToleranceFailure : std::runtime_error {
    explicit ToleranceFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace plab
