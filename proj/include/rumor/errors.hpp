#pragma once

#include <stdexcept>
#include <string>

namespace rumor {

// Invalid parameters or malformed input (maps to exit code 1 / RUMOR_E_PARAM).
class param_error : public std::invalid_argument {
public:
    explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

// Computation would exceed a configured budget (maps to exit code 2 / RUMOR_E_RESOURCE).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// File / serialization problems.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Observation has zero probability under every considered source.
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rumor
