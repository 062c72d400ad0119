#pragma once

#include "hlv/symfunc.hpp"

#include <map>
#include <utility>
#include <vector>

namespace oracle {

/// Element of Lambda(X) (x) Lambda(Y) in the basis p_a(X) p_b(Y).
using BiSym = std::map<std::pair<hlv::Partition, hlv::Partition>, hlv::TRational>;

inline void bisym_add(BiSym& acc, const hlv::Partition& a, const hlv::Partition& b, const hlv::TRational& c)
{
    auto [it, fresh] = acc.try_emplace({a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            acc.erase(it);
    }
}

/// F[X+Y] by p_n -> p_n(X) + p_n(Y), expanding each p_rho over the subsets
/// of its parts.
inline BiSym split_alphabet(const hlv::SymFunc& f)
{
    BiSym out;
    for (const auto& [rho, coeff] : f.terms()) {
        const std::size_t len = rho.length();
        for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
            std::vector<int> x, y;
            for (std::size_t i = 0; i < len; ++i)
                ((mask >> i) & 1UL ? y : x).push_back(rho[i]);
            bisym_add(out, hlv::Partition(x), hlv::Partition(y), coeff);
        }
    }
    return out;
}

/// A(X) B(Y).
inline BiSym tensor(const hlv::SymFunc& a, const hlv::SymFunc& b)
{
    BiSym out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms())
            bisym_add(out, ia, ib, ca * cb);
    return out;
}

inline void accumulate(BiSym& acc, const BiSym& more)
{
    for (const auto& [key, c] : more)
        bisym_add(acc, key.first, key.second, c);
}

} // namespace oracle
