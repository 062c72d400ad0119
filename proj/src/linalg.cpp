#include "hlv/linalg.hpp"

#include "hlv/errors.hpp"

#include <utility>

namespace hlv {

namespace {

int pivot_weight(const TRational& x)
{
    return x.num().degree() + x.den().degree();
}

} // namespace

RationalMatrix invert(RationalMatrix a)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw IntegrityError("invert: matrix is not square");

    RationalMatrix inv(n, std::vector<TRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = TRational(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (a[r][col].is_zero())
                continue;
            if (pivot == n || pivot_weight(a[r][col]) < pivot_weight(a[pivot][col]))
                pivot = r;
        }
        if (pivot == n)
            throw IntegrityError("invert: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);

        const TRational scale = TRational(1) / a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] *= scale;
            inv[col][c] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            const TRational factor = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                if (!a[col][c].is_zero())
                    a[r][c] -= factor * a[col][c];
                if (!inv[col][c].is_zero())
                    inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

} // namespace hlv
