#include "hiveflow/partition.hpp"

#include "hiveflow/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hiveflow {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidInstance("partition has a negative part: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInstance("partition is not weakly decreasing: " + to_string());
    }
}

std::int64_t Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::size_t Partition::length() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(parts_.begin(), parts_.end(), [](std::int64_t p) { return p > 0; }));
}

Partition Partition::padded(std::size_t n) const
{
    Partition out;
    out.parts_ = parts_;
    if (out.parts_.size() < n)
        out.parts_.resize(n, 0);
    return out;
}

Partition Partition::scaled(std::int64_t factor) const
{
    Partition out;
    out.parts_ = parts_;
    for (auto& p : out.parts_)
        p *= factor;
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool operator==(const Partition& a, const Partition& b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

Partition parse_partition(const std::string& text)
{
    std::vector<std::int64_t> parts;
    if (text.empty())
        return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view token(text.data() + pos, comma - pos);
        std::int64_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw InvalidInstance("malformed partition: '" + text + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Instance Instance::make(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const std::size_t n = std::max<std::size_t>({lambda.size(), mu.size(), nu.size(), 1});
    Instance inst{lambda.padded(n), mu.padded(n), nu.padded(n), static_cast<int>(n)};

    // Hive values are bounded by n times the largest border value, and border
    // values are partial sums, so keep every weight below 2^60 / n.
    const std::int64_t limit = (std::int64_t{1} << 60) / static_cast<std::int64_t>(n);
    for (const Partition* p : {&inst.lambda, &inst.mu, &inst.nu})
        for (std::int64_t part : p->parts())
            if (part > limit)
                throw InvalidInstance("part " + std::to_string(part) + " exceeds the overflow guard");
    if (inst.nu.weight() > limit || inst.lambda.weight() > limit || inst.mu.weight() > limit)
        throw InvalidInstance("partition weight exceeds the overflow guard");

    if (inst.nu.weight() != inst.lambda.weight() + inst.mu.weight())
        throw InvalidInstance("|nu| = " + std::to_string(inst.nu.weight()) + " differs from |lambda| + |mu| = " +
                              std::to_string(inst.lambda.weight() + inst.mu.weight()));
    return inst;
}

Instance Instance::scaled(std::int64_t factor) const
{
    return Instance::make(lambda.scaled(factor), mu.scaled(factor), nu.scaled(factor));
}

} // namespace hiveflow
