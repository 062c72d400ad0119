#pragma once

#include "hlv/symfunc.hpp"

#include <random>

namespace testing_support {

inline hlv::TRational one_minus_t()
{
    return hlv::TRational(hlv::TPoly::one_minus_t_pow(1));
}

inline hlv::TPoly poly(std::initializer_list<long> ascending)
{
    std::vector<hlv::BigRational> c;
    for (long x : ascending)
        c.emplace_back(x);
    return hlv::TPoly::from_dense(c);
}

inline hlv::TRational random_coeff(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> small(-3, 3);
    std::vector<hlv::BigRational> num(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 2)(rng)) + 1);
    for (auto& c : num)
        c = small(rng);
    if (num.back() == 0)
        num.back() = 1;
    hlv::TPoly den(1);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        den = hlv::TPoly::one_minus_t_pow(static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, 2)(rng)));
    return hlv::TRational(hlv::TPoly::from_dense(num), den);
}

inline hlv::SymFunc random_symfunc(std::mt19937_64& rng, int max_degree, int max_terms = 5)
{
    hlv::SymFunc out;
    const int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
    for (int k = 0; k < terms; ++k) {
        const int d = std::uniform_int_distribution<int>(0, max_degree)(rng);
        const auto parts = hlv::enumerate_partitions(d);
        out.add_term(parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)], random_coeff(rng));
    }
    return out;
}

} // namespace testing_support
