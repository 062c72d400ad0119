#pragma once

#include <algorithm>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline void partitions_into(int n, int max_part, Parts& prefix, std::vector<Parts>& out)
{
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_into(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

/// Partitions of n, largest first part first.
inline std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    Parts prefix;
    partitions_into(n, n, prefix, out);
    return out;
}

/// p(n) from Euler's pentagonal number recurrence.
inline long partition_count(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const long sign = k % 2 == 1 ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

/// Transpose of the Young diagram drawn as a boolean grid.
inline Parts transpose_diagram(const Parts& lambda)
{
    if (lambda.empty())
        return {};
    const int rows = static_cast<int>(lambda.size());
    const int cols = lambda.front();
    std::vector<std::vector<bool>> cell(rows, std::vector<bool>(cols, false));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < lambda[r]; ++c)
            cell[r][c] = true;
    Parts out;
    for (int c = 0; c < cols; ++c) {
        int height = 0;
        for (int r = 0; r < rows; ++r)
            height += cell[r][c] ? 1 : 0;
        out.push_back(height);
    }
    return out;
}

} // namespace oracle
