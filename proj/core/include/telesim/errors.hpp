#pragma once

#include <stdexcept>
#include <string>

namespace telesim {

/// Thrown when a numerical invariant (norm, unitarity, positivity, ...)
/// is violated at runtime. Distinct from std::invalid_argument, which is
/// reserved for rejected inputs; the CLI maps the two to different exit codes.
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected run configuration (unknown protocol, bad parameter, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace telesim
