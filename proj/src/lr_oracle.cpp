#include "hiveflow/lr_oracle.hpp"

#include <algorithm>
#include <vector>

namespace hiveflow {

namespace {

class TableauSearch {
public:
    TableauSearch(const Partition& lambda, const Partition& mu, const Partition& nu, bool first_only)
        : first_only_(first_only)
    {
        const std::size_t rows = std::max({lambda.size(), nu.size(), mu.size()});
        for (std::size_t r = 0; r < rows; ++r) {
            inner_.push_back(lambda[r]);
            outer_.push_back(nu[r]);
        }
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (mu[i] > 0)
                content_.push_back(mu[i]);
        used_.assign(content_.size() + 1, 0);
        // reverse reading order: rows top to bottom, each right to left
        for (std::size_t r = 0; r < rows; ++r)
            for (std::int64_t c = outer_[r] - 1; c >= inner_[r]; --c)
                cells_.push_back({static_cast<int>(r), c});
        filling_.resize(rows);
        for (std::size_t r = 0; r < rows; ++r)
            filling_[r].assign(static_cast<std::size_t>(std::max<std::int64_t>(outer_[r], 0)), 0);
    }

    bool valid_shape(const Partition& lambda, const Partition& mu, const Partition& nu) const
    {
        if (nu.weight() != lambda.weight() + mu.weight())
            return false;
        for (std::size_t r = 0; r < inner_.size(); ++r)
            if (inner_[r] > outer_[r])
                return false;
        return true;
    }

    std::uint64_t run() { return place(0); }

private:
    struct Cell {
        int row;
        std::int64_t col;
    };

    std::uint64_t place(std::size_t k)
    {
        if (k == cells_.size())
            return 1;
        const Cell cell = cells_[k];
        const int r = cell.row;
        const auto c = static_cast<std::size_t>(cell.col);
        // weakly increasing rows: bounded above by the right neighbour
        int hi = static_cast<int>(content_.size());
        if (cell.col + 1 < outer_[r])
            hi = std::min(hi, filling_[r][c + 1]);
        hi = std::min(hi, r + 1);
        // strictly increasing columns: above the cell in the previous row
        int lo = 1;
        if (r > 0 && cell.col >= inner_[r - 1] && cell.col < outer_[r - 1])
            lo = filling_[r - 1][c] + 1;
        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (used_[v] >= content_[v - 1])
                continue;
            if (v > 1 && used_[v] + 1 > used_[v - 1])
                continue;
            ++used_[v];
            filling_[r][c] = v;
            total += place(k + 1);
            --used_[v];
            if (first_only_ && total > 0)
                return total;
        }
        return total;
    }

    bool first_only_;
    std::vector<std::int64_t> inner_, outer_, content_;
    std::vector<std::int64_t> used_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> filling_;
};

} // namespace

std::uint64_t lr_count(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    TableauSearch s(lambda, mu, nu, false);
    return s.valid_shape(lambda, mu, nu) ? s.run() : 0;
}

bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    TableauSearch s(lambda, mu, nu, true);
    return s.valid_shape(lambda, mu, nu) && s.run() > 0;
}

} // namespace hiveflow
