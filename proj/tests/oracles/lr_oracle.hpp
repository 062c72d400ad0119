#pragma once

#include "partition_oracle.hpp"

#include <vector>

namespace oracle {

/// Littlewood-Richardson coefficient c^lambda_{mu nu}: the number of
/// semistandard fillings of lambda/mu with content nu whose reverse reading
/// word (rows top to bottom, each right to left) is a lattice word.
class LRCounter {
public:
    LRCounter(const Parts& lambda, const Parts& mu, const Parts& nu) : lambda_(lambda), mu_(mu), nu_(nu)
    {
        valid_ = mu_.size() <= lambda_.size();
        for (std::size_t r = 0; valid_ && r < mu_.size(); ++r)
            valid_ = mu_[r] <= lambda_[r];
        if (!valid_)
            return;
        mu_.resize(lambda_.size(), 0);
        for (std::size_t r = 0; r < lambda_.size(); ++r) {
            filling_.emplace_back(static_cast<std::size_t>(lambda_[r]), 0);
            for (int c = lambda_[r] - 1; c >= mu_[r]; --c)
                cells_.push_back({static_cast<int>(r), c});
        }
        used_.assign(nu_.size(), 0);
    }

    long count()
    {
        if (!valid_ || cells_.size() != static_cast<std::size_t>(sum(nu_)))
            return 0;
        return place(0);
    }

private:
    struct Cell {
        int row;
        int col;
    };

    static int sum(const Parts& p)
    {
        int s = 0;
        for (int x : p)
            s += x;
        return s;
    }

    long place(std::size_t k)
    {
        if (k == cells_.size())
            return 1;
        const Cell cell = cells_[k];
        const auto r = static_cast<std::size_t>(cell.row);
        const auto c = static_cast<std::size_t>(cell.col);
        long total = 0;
        for (int v = 1; v <= static_cast<int>(nu_.size()); ++v) {
            const auto idx = static_cast<std::size_t>(v - 1);
            if (used_[idx] == nu_[idx])
                continue;
            if (v > 1 && used_[idx] + 1 > used_[idx - 1])
                continue;
            if (c + 1 < filling_[r].size() && static_cast<int>(c + 1) >= mu_[r] && filling_[r][c + 1] < v)
                continue;
            if (r > 0 && static_cast<int>(c) >= mu_[r - 1] && filling_[r - 1][c] >= v)
                continue;
            filling_[r][c] = v;
            ++used_[idx];
            total += place(k + 1);
            --used_[idx];
            filling_[r][c] = 0;
        }
        return total;
    }

    Parts lambda_;
    Parts mu_;
    Parts nu_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> filling_;
    std::vector<int> used_;
    bool valid_ = true;
};

inline long lr_coefficient(const Parts& lambda, const Parts& mu, const Parts& nu)
{
    return LRCounter(lambda, mu, nu).count();
}

} // namespace oracle
