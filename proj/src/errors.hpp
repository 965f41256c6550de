#pragma once

#include <stdexcept>
#include <string>

namespace dehnfill {

// Input outside the mathematical domain of an operation (c = 0, |Im c| >= pi,
// degenerate level s = 0, oversized packing window, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// A solver failed to meet its contract (bracket failure, wrong root count).
// The message carries diagnostics for the failing configuration.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dehnfill
