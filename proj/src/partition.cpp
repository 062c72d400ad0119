#include "hlv/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlv {

namespace {

std::size_t trimmed_size(const std::vector<int>& parts)
{
    std::size_t n = parts.size();
    while (n > 0 && parts[n - 1] == 0)
        --n;
    return n;
}

std::size_t hash_ints(const int* data, std::size_t n)
{
    std::size_t h = 0x9e3779b97f4a7c15ull ^ n;
    for (std::size_t i = 0; i < n; ++i)
        h ^= std::hash<int>{}(data[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace

// ---- Composition -----------------------------------------------------------

Composition Composition::canonical() const
{
    return Composition(std::vector<int>(parts_.begin(), parts_.begin() + trimmed_size(parts_)));
}

long Composition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Composition::positive_weight() const
{
    long total = 0;
    for (int p : parts_)
        if (p > 0)
            total += p;
    return total;
}

bool Composition::is_partition() const
{
    const std::size_t n = trimmed_size(parts_);
    for (std::size_t i = 0; i < n; ++i) {
        if (parts_[i] <= 0)
            return false;
        if (i > 0 && parts_[i] > parts_[i - 1])
            return false;
    }
    return true;
}

bool operator==(const Composition& a, const Composition& b)
{
    const std::size_t n = trimmed_size(a.parts_);
    return n == trimmed_size(b.parts_) && std::equal(a.parts_.begin(), a.parts_.begin() + n, b.parts_.begin());
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b)
{
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.begin() + trimmed_size(a.parts_),
                                                  b.parts_.begin(), b.parts_.begin() + trimmed_size(b.parts_));
}

std::string Composition::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

// ---- Partition -------------------------------------------------------------

Partition::Partition(std::vector<int> parts)
{
    parts.resize(trimmed_size(parts));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive: " + Composition(parts).to_string());
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing: " +
                                        Composition(parts).to_string());
    }
    weight_ = std::accumulate(parts.begin(), parts.end(), 0);
    parts_ = std::move(parts);
}

Partition::Partition(std::vector<int> parts, Unchecked)
    : parts_(std::move(parts)), weight_(std::accumulate(parts_.begin(), parts_.end(), 0))
{
}

Partition Partition::from_multiset(std::vector<int> parts)
{
    std::erase(parts, 0);
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
        throw std::invalid_argument("negative part in partition multiset");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts), Unchecked{});
}

bool Partition::is_strict() const
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::vector<int> Partition::multiplicities() const
{
    std::vector<int> mult(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_)
        ++mult[p];
    return mult;
}

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> parts;
    parts.reserve(a.parts_.size() + b.parts_.size());
    std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(), std::back_inserter(parts),
               std::greater<>());
    return Partition(std::move(parts), Partition::Unchecked{});
}

Partition remove_parts(const Partition& whole, const Partition& sub, bool& ok)
{
    std::vector<int> parts;
    parts.reserve(whole.parts_.size());
    std::size_t j = 0;
    for (int p : whole.parts_) {
        if (j < sub.parts_.size() && sub.parts_[j] == p)
            ++j;
        else
            parts.push_back(p);
    }
    ok = j == sub.parts_.size();
    return Partition(std::move(parts), Partition::Unchecked{});
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts(static_cast<std::size_t>(lambda.largest()), 0);
    for (int p : lambda.parts())
        for (int i = 0; i < p; ++i)
            ++parts[i];
    return Partition(std::move(parts));
}

long epsilon(const Partition& lambda)
{
    long total = 0;
    const Partition columns = conjugate(lambda);
    for (int column : columns.parts())
        total += static_cast<long>(column) * (column - 1) / 2;
    return total;
}

TPoly c_poly(const Partition& lambda)
{
    TPoly out(1);
    for (int k : lambda.multiplicities())
        for (int j = 1; j <= k; ++j)
            out *= TPoly::one_minus_t_pow(static_cast<std::uint32_t>(j));
    return out;
}

BigInt z_factor(const Partition& lambda)
{
    BigInt z = 1;
    const auto mult = lambda.multiplicities();
    for (std::size_t i = 1; i < mult.size(); ++i) {
        for (int j = 1; j <= mult[i]; ++j)
            z *= static_cast<unsigned long>(i) * static_cast<unsigned long>(j);
    }
    return z;
}

Composition prepend(int n, const Composition& lambda)
{
    std::vector<int> parts;
    parts.reserve(lambda.size() + 1);
    parts.push_back(n);
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return Composition(std::move(parts));
}

Composition raising(const Composition& lambda, std::size_t i, std::size_t j)
{
    if (i < 1 || i >= j || j > lambda.size())
        throw std::out_of_range("raising operator R_" + std::to_string(i) + "," + std::to_string(j) +
                                " out of range for " + lambda.to_string());
    std::vector<int> parts = lambda.parts();
    ++parts[i - 1];
    --parts[j - 1];
    return Composition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Reverse-lex successor: find the rightmost part > 1, decrement it, and
    // refill the tail greedily with parts no larger than it.
    std::vector<int> current{n};
    for (;;) {
        out.emplace_back(current);
        int ones = 0;
        while (!current.empty() && current.back() == 1) {
            current.pop_back();
            ++ones;
        }
        if (current.empty())
            break;
        int top = --current.back();
        int remaining = ones + 1;
        while (remaining > 0) {
            int part = std::min(top, remaining);
            current.push_back(part);
            remaining -= part;
        }
    }
    return out;
}

Partition to_partition(const Composition& composition)
{
    return Partition(composition.parts());
}

} // namespace hlv

std::size_t std::hash<hlv::Composition>::operator()(const hlv::Composition& c) const noexcept
{
    const auto& p = c.parts();
    std::size_t n = p.size();
    while (n > 0 && p[n - 1] == 0)
        --n;
    return hlv::hash_ints(p.data(), n);
}

std::size_t std::hash<hlv::Partition>::operator()(const hlv::Partition& p) const noexcept
{
    return hlv::hash_ints(p.parts().data(), p.length());
}
