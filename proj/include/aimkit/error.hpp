#pragma once

#include <stdexcept>
#include <string>

namespace aimkit {

// Raised when an algorithm reaches a state its own invariants rule out.
// Caller-side precondition violations use std::invalid_argument instead.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

} // namespace aimkit
