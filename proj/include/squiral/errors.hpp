#pragma once

#include <stdexcept>
#include <string>

namespace squiral {

// Thrown when a computation would exceed a configured level, size or memory
// budget. Callers can retry with a larger budget.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a brute-force count cannot be certified by a saturation
// plateau within the level budget. A count is never reported uncertified.
class unverified_error : public std::runtime_error {
public:
    explicit unverified_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace squiral
