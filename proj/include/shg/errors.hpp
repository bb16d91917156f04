#pragma once

#include <stdexcept>
#include <string>

namespace shg {

// Base class for every error this library throws.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data: bad vertices, wrong edge sizes, infeasible parameters.
class validation_error : public error {
public:
    using error::error;
};

// Text input violating the SHG/SHGM grammar; message carries the line number.
class parse_error : public error {
public:
    using error::error;
};

// Exact-arithmetic result (or a required intermediate) exceeds 128 bits.
class arithmetic_error : public error {
public:
    using error::error;
};

// A documented operation precondition does not hold for the given input.
class precondition_error : public error {
public:
    using error::error;
};

// An internal invariant failed. Indicates a bug; never reported silently.
class consistency_error : public error {
public:
    using error::error;
};

// Node or wall-clock budget exhausted before an exact answer was proven.
class resource_error : public error {
public:
    using error::error;
};

}  // namespace shg
