#pragma once

#include <stdexcept>
#include <string>

namespace hiveflow {

/// Rejected input: malformed partitions, weight mismatch, overflow risk.
class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two operands were built over different grids.
class GridMismatch : public std::invalid_argument {
public:
    GridMismatch() : std::invalid_argument("flow classes live on different grids") {}
};

/// Enumeration stopped after reaching its point limit.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::size_t limit)
        : std::runtime_error("enumeration cap of " + std::to_string(limit) + " points exceeded"),
          limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

/// A structural guarantee of the hive-flow machinery did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hiveflow
