#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hiveflow {

/// Weakly decreasing tuple of nonnegative integers. Indexing past the stored
/// length yields 0, which is how shorter partitions are zero-padded.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);
    Partition(std::initializer_list<std::int64_t> parts)
        : Partition(std::vector<std::int64_t>(parts)) {}

    std::size_t size() const noexcept { return parts_.size(); }
    std::int64_t operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }

    std::int64_t weight() const noexcept;
    std::int64_t largest() const noexcept { return (*this)[0]; }
    /// Number of nonzero parts.
    std::size_t length() const noexcept;

    Partition padded(std::size_t n) const;
    Partition scaled(std::int64_t factor) const;
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b);

private:
    std::vector<std::int64_t> parts_;
};

/// Parses "5,5,3,1". Empty string means the empty partition.
Partition parse_partition(const std::string& text);

/// A triple (lambda, mu, nu) padded to the common length n.
struct Instance {
    Partition lambda;
    Partition mu;
    Partition nu;
    int n = 1;

    /// Pads to the longest input and checks |nu| = |lambda| + |mu| together with
    /// the overflow guard on part sizes.
    static Instance make(const Partition& lambda, const Partition& mu, const Partition& nu);

    Instance scaled(std::int64_t factor) const;
};

} // namespace hiveflow
