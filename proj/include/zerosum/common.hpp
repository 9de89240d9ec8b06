#pragma once

#include <stdexcept>

namespace zerosum {

// Search or enumeration exceeded its explicit budget. Never a silent
// approximation: callers must treat this as "unknown", not "false".
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator's self-check failed. Reserved for implementation bugs.
struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zerosum
