#pragma once

#include <stdexcept>
#include <string>

namespace bellcv {

// Bad user input: malformed config, out-of-range parameters.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal numeric failure: broken invariant, overflow, aliasing, instability.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// A requested accuracy cannot be met with the given resources. Carries a hint
// for the resource that would fix it (e.g. the smallest adequate mode count).
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, long suggested = -1)
        : std::runtime_error(msg), suggested_resource(suggested) {}
    long suggested_resource;
};

} // namespace bellcv
