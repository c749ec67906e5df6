#pragma once

#include <stdexcept>
#include <string>

namespace hallforge {

// A requested computation would leave the finite enumeration range
// (grading bound, group-size cap, unsupported field order).
class bound_exceeded : public std::runtime_error {
public:
    explicit bound_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad labels, out-of-range indices, invalid quiver, ...
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A diagram handed to a checker violates its structural precondition
// (square does not commute, functors do not compose, ...).
class diagram_error : public std::logic_error {
public:
    explicit diagram_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hallforge
