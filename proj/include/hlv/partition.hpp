#pragma once

#include "hlv/bigrational.hpp"
#include "hlv/tpoly.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hlv {

/// Finite integer sequence; negative parts allowed. Stored raw so raising
/// operators keep positions; trailing zeros are ignored by ==, <=> and hash.
class Composition {
public:
    Composition() = default;
    Composition(std::vector<int> parts) : parts_(std::move(parts)) {}
    Composition(std::initializer_list<int> parts) : parts_(parts) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Copy with trailing zeros removed.
    Composition canonical() const;
    long weight() const;
    /// Sum of the positive parts.
    long positive_weight() const;
    bool is_partition() const;

    friend bool operator==(const Composition& a, const Composition& b);
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing and
    /// positive (trailing zeros are dropped first).
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts and drops zeros; throws on negative entries.
    static Partition from_multiset(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// First part, 0 for the empty partition.
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int weight() const { return weight_; }
    bool is_strict() const;
    /// Multiplicity of each part size: result[i] = #{j : parts[j] = i}.
    std::vector<int> multiplicities() const;

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const { return as_composition().to_string(); }

private:
    struct Unchecked {};
    Partition(std::vector<int> parts, Unchecked);

    std::vector<int> parts_;
    int weight_ = 0;

    friend Partition merge(const Partition& a, const Partition& b);
    friend Partition remove_parts(const Partition& whole, const Partition& sub, bool& ok);
};

/// Multiset union of parts, e.g. merge((2,1),(3,1)) = (3,2,1,1).
Partition merge(const Partition& a, const Partition& b);
/// Multiset difference whole - sub; ok is false when sub is not contained.
Partition remove_parts(const Partition& whole, const Partition& sub, bool& ok);

Partition conjugate(const Partition& lambda);

/// Sum over columns of C(lambda'_i, 2).
long epsilon(const Partition& lambda);

/// prod_i prod_{j=1}^{k_i} (1 - t^j), k_i the multiplicity of part i.
TPoly c_poly(const Partition& lambda);

/// z_lambda = prod_i i^{k_i} k_i!.
BigInt z_factor(const Partition& lambda);

/// (n, lambda_1, lambda_2, ...).
Composition prepend(int n, const Composition& lambda);

/// R_ij with 1-based i < j; throws std::out_of_range otherwise.
Composition raising(const Composition& lambda, std::size_t i, std::size_t j);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);

/// Converts a composition that happens to be a partition (after dropping
/// trailing zeros); throws std::invalid_argument otherwise.
Partition to_partition(const Composition& composition);

} // namespace hlv

template <>
struct std::hash<hlv::Composition> {
    std::size_t operator()(const hlv::Composition& c) const noexcept;
};

template <>
struct std::hash<hlv::Partition> {
    std::size_t operator()(const hlv::Partition& p) const noexcept;
};
